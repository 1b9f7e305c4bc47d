#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qls/constructions.hpp"
#include "qls/qls_core.hpp"

namespace qls {

// Order-8 fixture catalog. The explicitly tabulated cardinalities:
// {17,19,21,23,25,27,29,31,33,34,...,44,46,47,48,50,51,52,54,56,60}.
// Even c in [8,32] and all c in [8,16] (minus 9) delegate to the
// direct-product construction. The open values
// {45,49,53,55,57,58,59,61,62,63} raise NotInCatalog.
QLS catalog_qls8(std::size_t c);

// Cardinalities with an explicitly tabulated grid, ascending.
const std::vector<std::size_t>& catalog8_explicit_cardinalities();

// 1-based position of c within the explicit table; throws NotInCatalog.
std::size_t catalog_case_id(std::size_t c);

// Audit notes produced while building the fixture for c: printed entry
// expressions that disagree with the values the defining recipe yields
// (the c = 47 block is rebuilt from its matrix definition because its
// printed list is internally inconsistent).
std::vector<std::string> catalog_audit(std::size_t c);

// Executes any plan, routing catalog plans through catalog_qls8.
QLS realize_plan(const ConstructionPlan& plan);

}  // namespace qls
