#ifndef QADSIM_FOCK_SERIALIZE_HPP
#define QADSIM_FOCK_SERIALIZE_HPP

// JSON layout shared by operators and states:
//
//   { "basis": {"modes": k, "cutoff": N, "dimension": d},
//     "kind": "state" | "operator" | "hermitian",
//     "storage": "dense" | "diagonal",          (operators only)
//     "data": [[re, im], ...] }                  row-major for matrices
//
// Diagonal storage lists the d real diagonal entries as [re, 0] pairs.

#include <json.hpp>

#include "qadsim/fock/operators.hpp"

namespace qadsim {

nlohmann::json to_json(const FockBasis& basis);
FockBasis basis_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StateVector& v);
nlohmann::json to_json(const Operator& op);
nlohmann::json to_json(const HermitianOperator& op);

StateVector state_from_json(const nlohmann::json& j);
Operator operator_from_json(const nlohmann::json& j);
HermitianOperator hermitian_from_json(const nlohmann::json& j);

}  // namespace qadsim

#endif  // QADSIM_FOCK_SERIALIZE_HPP
