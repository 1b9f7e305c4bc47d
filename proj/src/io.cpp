#include "qls/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qls/errors.hpp"

namespace qls {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_schema(const json& doc, const char* expected,
                    const std::string& context) {
  if (!doc.is_object() || !doc.contains("schema") ||
      !doc["schema"].is_string())
    throw ParseError(context + ": missing schema tag");
  const std::string schema = doc["schema"].get<std::string>();
  if (schema != expected)
    throw ParseError(context + ": schema mismatch: expected \"" + expected +
                     "\", found \"" + schema + "\"");
}

json parse_text(const std::string& text, const std::string& context) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(context + ": malformed JSON");
  return doc;
}

std::size_t read_order(const json& doc, const std::string& context) {
  if (!doc.contains("order") || !doc["order"].is_number_unsigned())
    throw ParseError(context + ": missing or invalid \"order\"");
  const std::size_t order = doc["order"].get<std::size_t>();
  if (order == 0) throw ParseError(context + ": order must be positive");
  return order;
}

std::vector<std::vector<int>> read_cells(const json& arr, std::size_t order,
                                         const std::string& context) {
  if (!arr.is_array() || arr.size() != order)
    throw ParseError(context + ": cell array must have " +
                     std::to_string(order) + " rows");
  std::vector<std::vector<int>> cells(order, std::vector<int>(order));
  for (std::size_t i = 0; i < order; ++i) {
    const json& row = arr[i];
    if (!row.is_array() || row.size() != order)
      throw ParseError(context + ": row " + std::to_string(i) +
                       " must have " + std::to_string(order) + " entries");
    for (std::size_t j = 0; j < order; ++j) {
      if (!row[j].is_number_integer())
        throw ParseError(context + ": non-integer cell at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      cells[i][j] = row[j].get<int>();
    }
  }
  return cells;
}

}  // namespace

std::string qls_to_json(const QLS& phi,
                        const std::optional<DocumentMetadata>& meta) {
  json entries = json::array();
  for (std::size_t i = 0; i < phi.order; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < phi.order; ++j) {
      json cell = json::array();
      const Vec& u = phi.grid[i][j];
      for (std::size_t k = 0; k < phi.order; ++k)
        cell.push_back(json::array({u[k].real(), u[k].imag()}));
      row.push_back(std::move(cell));
    }
    entries.push_back(std::move(row));
  }
  json doc;
  doc["schema"] = kQLSSchema;
  doc["order"] = phi.order;
  doc["entries"] = std::move(entries);
  if (meta) {
    json m;
    if (!meta->method.empty()) m["method"] = meta->method;
    if (!meta->parameters.empty()) m["parameters"] = meta->parameters;
    if (meta->claimed_cardinality)
      m["claimed_cardinality"] = *meta->claimed_cardinality;
    doc["metadata"] = std::move(m);
  }
  return doc.dump(2) + "\n";
}

void save_qls(const QLS& phi, const std::string& path,
              const std::optional<DocumentMetadata>& meta,
              const Tolerance& tol) {
  const VerificationReport rep = verify_qls(phi, tol);
  if (!rep.pass)
    throw InvalidQLS("save_qls: grid fails verification (worst deviation " +
                     std::to_string(rep.worst_deviation()) + ")");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("save_qls: cannot open " + path + " for writing");
  out << qls_to_json(phi, meta);
  if (!out) throw ParseError("save_qls: write failed for " + path);
}

QLSDocument qls_from_json(const std::string& text, const Tolerance& tol) {
  const std::string ctx = "load_qls";
  json doc = parse_text(text, ctx);
  require_schema(doc, kQLSSchema, ctx);
  const std::size_t order = read_order(doc, ctx);

  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      doc["entries"].size() != order)
    throw ParseError(ctx + ": \"entries\" must be an array of " +
                     std::to_string(order) + " rows");

  QLSDocument out;
  out.qls.order = order;
  out.qls.grid.assign(order, std::vector<Vec>(order, Vec(order)));
  for (std::size_t i = 0; i < order; ++i) {
    const json& row = doc["entries"][i];
    if (!row.is_array() || row.size() != order)
      throw ParseError(ctx + ": row " + std::to_string(i) + " must have " +
                       std::to_string(order) + " cells");
    for (std::size_t j = 0; j < order; ++j) {
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != order)
        throw ParseError(ctx + ": cell (" + std::to_string(i) + "," +
                         std::to_string(j) + ") must have " +
                         std::to_string(order) + " amplitudes");
      for (std::size_t k = 0; k < order; ++k) {
        const json& amp = cell[k];
        if (!amp.is_array() || amp.size() != 2 || !amp[0].is_number() ||
            !amp[1].is_number())
          throw ParseError(ctx + ": amplitude (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) +
                           ") must be [re, im]");
        out.qls.grid[i][j][k] =
            cplx{amp[0].get<double>(), amp[1].get<double>()};
      }
    }
  }

  if (doc.contains("metadata")) {
    const json& m = doc["metadata"];
    if (!m.is_object()) throw ParseError(ctx + ": metadata must be an object");
    DocumentMetadata meta;
    if (m.contains("method") && m["method"].is_string())
      meta.method = m["method"].get<std::string>();
    if (m.contains("parameters") && m["parameters"].is_string())
      meta.parameters = m["parameters"].get<std::string>();
    if (m.contains("claimed_cardinality") &&
        m["claimed_cardinality"].is_number_unsigned())
      meta.claimed_cardinality = m["claimed_cardinality"].get<std::size_t>();
    out.metadata = meta;
  }

  const VerificationReport rep = verify_qls(out.qls, tol);
  if (!rep.pass)
    throw InvalidQLS(ctx + ": loaded grid fails verification (worst deviation " +
                     std::to_string(rep.worst_deviation()) + ")");
  return out;
}

QLSDocument load_qls(const std::string& path, const Tolerance& tol) {
  return qls_from_json(read_file(path), tol);
}

LatinSquare load_latin_square(const std::string& path) {
  const std::string ctx = "load_latin_square";
  json doc = parse_text(read_file(path), ctx);
  require_schema(doc, kLatinSchema, ctx);
  const std::size_t order = read_order(doc, ctx);
  if (!doc.contains("cells"))
    throw ParseError(ctx + ": missing \"cells\"");
  LatinSquare L;
  L.order = order;
  L.cells = read_cells(doc["cells"], order, ctx);
  const ValidationResult r = validate_ls(L);
  if (!r.pass) throw ParseError(ctx + ": " + r.first_violation);
  return L;
}

OLSPair load_ols_pair(const std::string& path) {
  const std::string ctx = "load_ols_pair";
  json doc = parse_text(read_file(path), ctx);
  require_schema(doc, kOLSSchema, ctx);
  const std::size_t order = read_order(doc, ctx);
  if (!doc.contains("first") || !doc.contains("second"))
    throw ParseError(ctx + ": missing \"first\" or \"second\"");
  OLSPair p;
  p.first.order = order;
  p.first.cells = read_cells(doc["first"], order, ctx + " (first)");
  p.second.order = order;
  p.second.cells = read_cells(doc["second"], order, ctx + " (second)");
  const ValidationResult r = validate_ols(p);
  if (!r.pass) throw ParseError(ctx + ": " + r.first_violation);
  return p;
}

}  // namespace qls
