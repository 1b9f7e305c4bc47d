#pragma once

#include <optional>
#include <string>

#include "qls/latin.hpp"
#include "qls/linalg.hpp"
#include "qls/qls_core.hpp"

namespace qls {

// Wire-format schema tags. A mismatching tag is a hard ParseError.
inline constexpr const char* kQLSSchema = "qls-document/1";
inline constexpr const char* kLatinSchema = "latin-square/1";
inline constexpr const char* kOLSSchema = "ols-pair/1";

struct DocumentMetadata {
  std::string method;
  std::string parameters;
  std::optional<std::size_t> claimed_cardinality;
};

struct QLSDocument {
  QLS qls;
  std::optional<DocumentMetadata> metadata;
};

// JSON layout: { "schema", "order", "entries": v x v x v x [re, im]
// (row-major), "metadata"? }. Numbers are serialized with full
// round-trip precision, so save/load is lossless.
std::string qls_to_json(const QLS& phi,
                        const std::optional<DocumentMetadata>& meta = {});

// Serializes a verified QLS; throws InvalidQLS if phi fails verify_qls.
void save_qls(const QLS& phi, const std::string& path,
              const std::optional<DocumentMetadata>& meta = {},
              const Tolerance& tol = default_tolerance());

// Parses and re-verifies. ParseError on malformed/truncated input or a
// schema mismatch; InvalidQLS if the parsed grid fails verify_qls.
QLSDocument load_qls(const std::string& path,
                     const Tolerance& tol = default_tolerance());
QLSDocument qls_from_json(const std::string& text,
                          const Tolerance& tol = default_tolerance());

// User-supplied combinatorial inputs, validated before use.
// { "schema": "latin-square/1", "order", "cells": v x v integers }
LatinSquare load_latin_square(const std::string& path);
// { "schema": "ols-pair/1", "order", "first", "second" }
OLSPair load_ols_pair(const std::string& path);

}  // namespace qls
