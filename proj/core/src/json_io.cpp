#include "a4strat/json_io.hpp"

#include <fstream>

#include "a4strat/errors.hpp"

namespace a4strat {
namespace {

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, const char* name) {
  if (!j.is_array() || j.empty()) throw DomainError(std::string("block ") + name + " must be a non-empty array");
  const auto n = static_cast<Eigen::Index>(j.size());
  IntMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw DomainError(std::string("block ") + name + " must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number_integer()) throw DomainError(std::string("block ") + name + " entries must be integers");
      out(r, c) = v.get<std::int64_t>();
    }
  }
  return out;
}

std::vector<Json> chars_to_json(std::span<const Characteristic> chars) {
  std::vector<Json> out;
  for (const auto& m : chars) out.push_back(m.to_string());
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DomainError("complex numbers must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const Characteristic& m) { return m.to_string(); }

Json to_json(const CharTuple& t) { return Json(chars_to_json(t.entries())); }

Json to_json(const SymplecticInteger& gamma) {
  return Json{{"A", matrix_to_json(gamma.a())},
              {"B", matrix_to_json(gamma.b())},
              {"C", matrix_to_json(gamma.c())},
              {"D", matrix_to_json(gamma.d())}};
}

Json to_json(const SymplecticModTwo& gamma) {
  const int g = gamma.genus();
  auto block = [&](auto at) {
    Json rows = Json::array();
    for (int i = 0; i < g; ++i) {
      Json row = Json::array();
      for (int j = 0; j < g; ++j) row.push_back(at(i, j));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return Json{{"A", block([&](int i, int j) { return gamma.a(i, j); })},
              {"B", block([&](int i, int j) { return gamma.b(i, j); })},
              {"C", block([&](int i, int j) { return gamma.c(i, j); })},
              {"D", block([&](int i, int j) { return gamma.d(i, j); })}};
}

Json to_json(const SiegelPoint& tau) {
  Json rows = Json::array();
  for (int i = 0; i < tau.genus(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < tau.genus(); ++j) row.push_back(complex_to_json(tau.tau()(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"genus", tau.genus()}, {"tau", std::move(rows)}};
}

Json to_json(const ThetaValue& v) {
  return Json{{"value", complex_to_json(v.value)}, {"tail_bound", v.tail_bound}, {"radius", v.radius}};
}

Json to_json(const FormValue& v) {
  return Json{{"form", std::string(form_name(v.form))},
              {"value", complex_to_json(v.value)},
              {"normalizer", v.normalizer},
              {"relative_magnitude", v.relative_magnitude}};
}

Json to_json(const OrbitProfile& p) {
  Json triples = Json::array();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < p.length; ++i)
    for (std::size_t j = i + 1; j < p.length; ++j)
      for (std::size_t k = j + 1; k < p.length; ++k)
        triples.push_back(Json{{"triple", {i, j, k}}, {"parity", p.triple_parities[rank++]}});
  return Json{{"length", p.length}, {"relation_basis", p.relation_basis}, {"triple_parities", std::move(triples)}};
}

Json to_json(const StratumReport& r) {
  Json splits = Json::array();
  for (const auto& s : r.splits) splits.push_back(Json{{"k", s.k}, {"witness", to_json(s.witness)}});
  return Json{{"label", std::string(stratum_name(r.label))},
              {"form_magnitudes",
               {{"FT", r.form_magnitudes.schottky},
                {"THETANULL", r.form_magnitudes.theta_null},
                {"F1", r.form_magnitudes.f1}}},
              {"vanishing_set", chars_to_json(r.vanishing_set)},
              {"splits", std::move(splits)},
              {"decomposition", describe(r.decomposition)},
              {"threshold", r.threshold},
              {"margin", r.margin},
              {"warnings", r.warnings},
              {"diagnostics", r.diagnostics}};
}

CharTuple tuple_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("tuple must be a non-empty array of characteristic strings");
  std::vector<Characteristic> entries;
  for (const auto& e : j) {
    if (!e.is_string()) throw DomainError("tuple entries must be strings like \"01|10\"");
    entries.push_back(Characteristic::parse(e.get<std::string>()));
  }
  const int genus = entries.front().genus();
  return CharTuple(genus, std::move(entries));
}

SymplecticInteger symplectic_from_json(const Json& j) {
  for (const char* key : {"A", "B", "C", "D"}) {
    if (!j.contains(key)) throw DomainError(std::string("symplectic matrix is missing block ") + key);
  }
  return SymplecticInteger(matrix_from_json(j["A"], "A"), matrix_from_json(j["B"], "B"),
                           matrix_from_json(j["C"], "C"), matrix_from_json(j["D"], "D"));
}

SymplecticModTwo symplectic_mod_two_from_json(const Json& j) {
  const auto lifted = [&](const char* key) {
    if (!j.contains(key)) throw DomainError(std::string("mod-2 matrix is missing block ") + key);
    return matrix_from_json(j[key], key);
  };
  const IntMatrix a = lifted("A"), b = lifted("B"), c = lifted("C"), d = lifted("D");
  const auto g = a.rows();
  BitMatrix m(2 * g, 2 * g);
  const IntMatrix* blocks[2][2] = {{&a, &b}, {&c, &d}};
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      const IntMatrix& blk = *blocks[bi][bj];
      if (blk.rows() != g) throw DomainError("mod-2 blocks must share one size");
      for (Eigen::Index r = 0; r < g; ++r)
        for (Eigen::Index c2 = 0; c2 < g; ++c2) {
          const auto v = blk(r, c2);
          if (v != 0 && v != 1) throw DomainError("mod-2 entries must be 0 or 1");
          m(bi * g + r, bj * g + c2) = static_cast<std::uint8_t>(v);
        }
    }
  return SymplecticModTwo(std::move(m));
}

SiegelPoint siegel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("tau")) {
    throw DomainError("tau file must be an object with \"genus\" and \"tau\"");
  }
  if (!j["genus"].is_number_integer()) throw DomainError("\"genus\" must be an integer");
  const int g = j["genus"].get<int>();
  const auto& rows = j["tau"];
  if (g < 1 || !rows.is_array() || static_cast<int>(rows.size()) != g) {
    throw DomainError("\"tau\" must have genus-many rows");
  }
  ComplexMatrix tau(g, g);
  for (int r = 0; r < g; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != g) throw DomainError("\"tau\" must be square");
    for (int c = 0; c < g; ++c) tau(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return SiegelPoint::from_matrix(tau);
}

SiegelPoint read_siegel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open tau file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw DomainError("tau file " + path + " is not valid JSON: " + e.what());
  }
  return siegel_from_json(j);
}

}  // namespace a4strat
