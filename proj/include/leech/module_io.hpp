#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "leech/leech_module.hpp"

namespace leech {

namespace detail {

inline Int json_to_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());  // big values round-trip as strings
    } catch (const std::exception&) {
      raise(Errc::parse_error, "malformed integer string: " + j.get<std::string>());
    }
  }
  raise(Errc::parse_error, "expected an integer entry");
}

inline nlohmann::json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline AbGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("free_rank") || !j.contains("torsion"))
    raise(Errc::parse_error, "group needs free_rank and torsion");
  if (!j["free_rank"].is_number_integer() || j["free_rank"].get<long long>() < 0)
    raise(Errc::parse_error, "free_rank must be a nonnegative integer");
  std::vector<Int> torsion;
  for (const auto& d : j["torsion"]) {
    torsion.push_back(json_to_int(d));
    if (torsion.back() < 2) raise(Errc::parse_error, "torsion orders must be >= 2");
    if (torsion.size() > 1 && torsion.back() % torsion[torsion.size() - 2] != 0)
      raise(Errc::parse_error, "torsion orders must be listed in divisibility order");
  }
  return AbGroup::mixed(j["free_rank"].get<std::size_t>(), torsion);
}

inline IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) raise(Errc::parse_error, "matrix row count mismatch");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      raise(Errc::parse_error, "matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = json_to_int(j[i][c]);
  }
  return m;
}

}  // namespace detail

/// Reads a module description. Schema errors throw parse_error; matrices are
/// loaded without the torsion well-definedness check so that validate() can
/// report such defects instead.
inline LeechModule module_from_json(const nlohmann::json& j) {
  for (const char* key : {"monoid", "side", "groups", "push1", "pull1"})
    if (!j.contains(key)) raise(Errc::parse_error, std::string("missing field: ") + key);
  const auto& jm = j["monoid"];
  if (!jm.contains("index") || !jm.contains("period"))
    raise(Errc::parse_error, "monoid needs index and period");
  if (!jm["index"].is_number_integer() || !jm["period"].is_number_integer())
    raise(Errc::parse_error, "monoid index and period must be integers");
  CyclicMonoid monoid = [&] {
    try {
      return CyclicMonoid(jm["index"].get<int>(), jm["period"].get<int>());
    } catch (const Error& e) {
      raise(Errc::parse_error, e.what());
    }
  }();
  Side side;
  if (j["side"] == "left")
    side = Side::left;
  else if (j["side"] == "right")
    side = Side::right;
  else
    raise(Errc::parse_error, "side must be \"left\" or \"right\"");

  const std::size_t n = monoid.size();
  if (j["groups"].size() != n) raise(Errc::parse_error, "groups: need one entry per element");
  if (j["push1"].size() != n || j["pull1"].size() != n)
    raise(Errc::parse_error, "push1/pull1: need one matrix per element");

  std::vector<AbGroup> groups;
  for (std::size_t x = 0; x < n; ++x) groups.push_back(detail::group_from_json(j["groups"][x]));

  std::vector<AbHom> push1, pull1;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t x1 = monoid.add(static_cast<int>(x), 1);
    const AbGroup& src = side == Side::left ? groups[x] : groups[x1];
    const AbGroup& dst = side == Side::left ? groups[x1] : groups[x];
    push1.push_back(AbHom::unchecked(
        src, dst, detail::matrix_from_json(j["push1"][x], dst.dim(), src.dim())));
    pull1.push_back(AbHom::unchecked(
        src, dst, detail::matrix_from_json(j["pull1"][x], dst.dim(), src.dim())));
  }
  return LeechModule(monoid, side, std::move(groups), std::move(push1), std::move(pull1));
}

inline LeechModule module_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::parse_error, "not valid JSON");
  return module_from_json(j);
}

/// Serializes a module. Groups must be in the canonical layout (free
/// coordinates first, torsion orders chained), which every module built by
/// this library satisfies.
inline nlohmann::json module_to_json(const LeechModule& mod) {
  nlohmann::json j;
  j["format"] = "leech-module";
  j["monoid"] = {{"index", mod.monoid().index()}, {"period", mod.monoid().period()}};
  j["side"] = side_name(mod.side());
  nlohmann::json groups = nlohmann::json::array();
  for (int x = 0; x < mod.size(); ++x) {
    const AbGroup& g = mod.group(x);
    nlohmann::json torsion = nlohmann::json::array();
    Int prev = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (g.order(i) == 0) {
        if (i >= g.free_rank()) raise(Errc::invalid_argument, "group layout not canonical");
        continue;
      }
      if (prev != 0 && g.order(i) % prev != 0)
        raise(Errc::invalid_argument, "group torsion not chained");
      prev = g.order(i);
      torsion.push_back(detail::int_to_json(g.order(i)));
    }
    groups.push_back({{"free_rank", g.free_rank()}, {"torsion", torsion}});
  }
  j["groups"] = std::move(groups);
  auto matrices = [&](bool push) {
    nlohmann::json out = nlohmann::json::array();
    for (int x = 0; x < mod.size(); ++x) {
      const IntMatrix& m = push ? mod.push1(x).matrix() : mod.pull1(x).matrix();
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(detail::int_to_json(m.at(i, c)));
        rows.push_back(std::move(row));
      }
      out.push_back(std::move(rows));
    }
    return out;
  };
  j["push1"] = matrices(true);
  j["pull1"] = matrices(false);
  return j;
}

}  // namespace leech
