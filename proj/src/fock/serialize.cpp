#include "qadsim/fock/serialize.hpp"

#include "qadsim/error.hpp"

namespace qadsim {

using nlohmann::json;

namespace {

json pair(cplx z) { return json::array({z.real(), z.imag()}); }

cplx unpair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json dense_data(const DenseMatrix& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(pair(m(r, c)));
  }
  return data;
}

DenseMatrix dense_from(const json& data, std::size_t d) {
  if (data.size() != d * d) throw ConfigError("dense data has wrong length");
  DenseMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d * d; ++i) {
    m(static_cast<Eigen::Index>(i / d), static_cast<Eigen::Index>(i % d)) = unpair(data[i]);
  }
  return m;
}

}  // namespace

json to_json(const FockBasis& basis) {
  return {{"modes", basis.num_modes()},
          {"cutoff", basis.cutoff()},
          {"dimension", basis.dimension()}};
}

FockBasis basis_from_json(const json& j) {
  FockBasis b(j.at("modes").get<std::size_t>(), j.at("cutoff").get<std::int64_t>());
  if (j.contains("dimension") && j["dimension"].get<std::size_t>() != b.dimension()) {
    throw ConfigError("basis dimension inconsistent with modes and cutoff");
  }
  return b;
}

json to_json(const StateVector& v) {
  json data = json::array();
  for (Eigen::Index i = 0; i < v.amplitudes().size(); ++i) data.push_back(pair(v.amplitudes()[i]));
  return {{"basis", to_json(v.basis())}, {"kind", "state"}, {"data", std::move(data)}};
}

json to_json(const Operator& op) {
  return {{"basis", to_json(op.basis())},
          {"kind", "operator"},
          {"storage", "dense"},
          {"data", dense_data(op.matrix())}};
}

json to_json(const HermitianOperator& op) {
  json j = {{"basis", to_json(op.basis())}, {"kind", "hermitian"}};
  if (op.is_diagonal()) {
    json data = json::array();
    for (Eigen::Index i = 0; i < op.diagonal_values().size(); ++i) {
      data.push_back(pair(op.diagonal_values()[i]));
    }
    j["storage"] = "diagonal";
    j["data"] = std::move(data);
  } else {
    j["storage"] = "dense";
    j["data"] = dense_data(op.dense_matrix());
  }
  return j;
}

StateVector state_from_json(const json& j) {
  FockBasis b = basis_from_json(j.at("basis"));
  const auto& data = j.at("data");
  if (data.size() != b.dimension()) throw ConfigError("state data has wrong length");
  ComplexVector v(static_cast<Eigen::Index>(b.dimension()));
  for (std::size_t i = 0; i < b.dimension(); ++i) v[static_cast<Eigen::Index>(i)] = unpair(data[i]);
  return StateVector(b, std::move(v));
}

Operator operator_from_json(const json& j) {
  FockBasis b = basis_from_json(j.at("basis"));
  if (j.value("storage", "dense") == "diagonal") {
    return hermitian_from_json(j).to_operator();
  }
  return Operator(b, dense_from(j.at("data"), b.dimension()));
}

HermitianOperator hermitian_from_json(const json& j) {
  FockBasis b = basis_from_json(j.at("basis"));
  const auto& data = j.at("data");
  if (j.at("storage").get<std::string>() == "diagonal") {
    if (data.size() != b.dimension()) throw ConfigError("diagonal data has wrong length");
    RealVector d(static_cast<Eigen::Index>(b.dimension()));
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      const cplx z = unpair(data[i]);
      if (z.imag() != 0.0) throw ConfigError("diagonal entries must be real");
      d[static_cast<Eigen::Index>(i)] = z.real();
    }
    return HermitianOperator::diagonal(b, std::move(d));
  }
  return HermitianOperator::dense(b, dense_from(data, b.dimension()));
}

}  // namespace qadsim
