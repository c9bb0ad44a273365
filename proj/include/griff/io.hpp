#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "griff/formulas.hpp"
#include "griff/parallel.hpp"
#include "griff/rat.hpp"

namespace griff {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Strata ingestion. Schema:
//   { "N": int,
//     "fibers": [ { "components": [ {"id": str, "multiplicity": int,
//                                    "chi_open": int, "v": int?} ],
//                   "pairs": [ {"i": str, "j": str, "chi_open": int} ] } ] }
// Unknown keys are rejected.
// ---------------------------------------------------------------------------

namespace detail {

inline void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw std::invalid_argument("strata: unknown key '" + it.key() + "' in " + where);
  }
}

inline long require_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw std::invalid_argument("strata: missing key '" + key + "' in " + where);
  if (!obj[key].is_number_integer())
    throw std::invalid_argument("strata: key '" + key + "' in " + where + " must be an integer");
  return obj[key].get<long>();
}

inline std::string require_str(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw std::invalid_argument("strata: missing key '" + key + "' in " + where);
  if (!obj[key].is_string())
    throw std::invalid_argument("strata: key '" + key + "' in " + where + " must be a string");
  return obj[key].get<std::string>();
}

}  // namespace detail

inline std::vector<StrataSpec> parse_strata_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("strata: top level must be an object");
  detail::reject_unknown_keys(doc, {"N", "fibers"}, "top level");
  long N = detail::require_int(doc, "N", "top level");
  if (!doc.contains("fibers") || !doc["fibers"].is_array())
    throw std::invalid_argument("strata: 'fibers' must be an array");
  std::vector<StrataSpec> fibers;
  std::size_t fiber_idx = 0;
  for (const auto& f : doc["fibers"]) {
    std::string where = "fibers[" + std::to_string(fiber_idx++) + "]";
    if (!f.is_object()) throw std::invalid_argument("strata: " + where + " must be an object");
    detail::reject_unknown_keys(f, {"components", "pairs"}, where);
    StrataSpec spec;
    spec.N = N;
    if (!f.contains("components") || !f["components"].is_array())
      throw std::invalid_argument("strata: " + where + " needs a 'components' array");
    for (const auto& c : f["components"]) {
      detail::reject_unknown_keys(c, {"id", "multiplicity", "chi_open", "v", "chern_integral"},
                                  where + ".components");
      StrataComponent comp;
      comp.id = detail::require_str(c, "id", where);
      comp.multiplicity = detail::require_int(c, "multiplicity", where);
      comp.chi_open = detail::require_int(c, "chi_open", where);
      if (c.contains("v")) comp.v = detail::require_int(c, "v", where);
      if (c.contains("chern_integral"))
        comp.chern_integral = Rat(detail::require_int(c, "chern_integral", where));
      spec.components.push_back(std::move(comp));
    }
    if (f.contains("pairs")) {
      if (!f["pairs"].is_array())
        throw std::invalid_argument("strata: 'pairs' in " + where + " must be an array");
      for (const auto& p : f["pairs"]) {
        detail::reject_unknown_keys(p, {"i", "j", "chi_open"}, where + ".pairs");
        StrataPair pair;
        pair.i = detail::require_str(p, "i", where);
        pair.j = detail::require_str(p, "j", where);
        pair.chi_open = detail::require_int(p, "chi_open", where);
        spec.pairs.push_back(std::move(pair));
      }
    }
    spec.validate();
    fibers.push_back(std::move(spec));
  }
  return fibers;
}

inline std::vector<StrataSpec> load_strata_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open strata file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("strata file '" + path + "': " + e.what());
  }
  return parse_strata_json(doc);
}

// ---------------------------------------------------------------------------
// Report rendering. Rationals serialize as "p/q" strings everywhere.
// ---------------------------------------------------------------------------

inline json curve_class_json(const CurveClass& cc) {
  return json{{"c0", cc.c0.str()}, {"m", cc.m.str()}, {"e", cc.e.str()}};
}

inline json height_report_json(const HeightReport& r) {
  json out;
  out["ht_int"] = r.ht_int.str();
  out["sigma_count"] = r.sigma_count.str();
  out["ht_plus"] = r.ht_plus.str();
  out["ht_minus"] = r.ht_minus.str();
  out["ht_stab"] = r.ht_stab.str();
  out["curve_class_plus"] = curve_class_json(r.curve_class_plus);
  out["curve_class_minus"] = curve_class_json(r.curve_class_minus);
  out["notices"] = r.notices;
  return out;
}

inline std::string height_report_text(const HeightReport& r, const std::string& sign_filter) {
  std::ostringstream os;
  auto row = [&os](const std::string& k, const std::string& v) {
    os << k;
    for (std::size_t i = k.size(); i < 18; ++i) os << ' ';
    os << "= " << v << "\n";
  };
  row("ht_int", r.ht_int.str());
  row("sigma_count", r.sigma_count.str());
  if (sign_filter.empty() || sign_filter == "plus") row("ht_plus", r.ht_plus.str());
  if (sign_filter.empty() || sign_filter == "minus") row("ht_minus", r.ht_minus.str());
  if (sign_filter.empty() || sign_filter == "stab") row("ht_stab", r.ht_stab.str());
  if (sign_filter.empty() || sign_filter == "plus")
    row("curve_class_plus", r.curve_class_plus.str());
  if (sign_filter.empty() || sign_filter == "minus")
    row("curve_class_minus", r.curve_class_minus.str());
  for (const auto& n : r.notices) os << "notice: " << n << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Formula tables.
// ---------------------------------------------------------------------------

struct TableRange {
  long lo = 1, hi = 1;

  // "a..b" or a single integer.
  static TableRange parse(const std::string& text) {
    TableRange r;
    auto pos = text.find("..");
    try {
      if (pos == std::string::npos) {
        r.lo = r.hi = std::stol(text);
      } else {
        r.lo = std::stol(text.substr(0, pos));
        r.hi = std::stol(text.substr(pos + 2));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range '" + text + "' (expected 'a..b')");
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    return r;
  }

  long size() const { return hi - lo + 1; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
    return os.str();
  }

  std::string to_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }
};

// Sweeps a formula family over the requested grid; rows are computed on the
// worker pool and assembled in grid order.
inline Table make_table(const std::string& formula, const TableRange& d_range,
                        const TableRange& n_range) {
  Table t;
  if (formula == "F") {
    t.columns = {"d", "N", "F_plus", "F_minus", "F_stab"};
    long nd = d_range.size(), nn = n_range.size();
    t.rows = parallel_map(static_cast<std::size_t>(nd * nn), [&](std::size_t idx) {
      long d = d_range.lo + static_cast<long>(idx) / nn;
      long N = n_range.lo + static_cast<long>(idx) % nn;
      FHeights f = F_heights(d, N);
      return std::vector<std::string>{std::to_string(d), std::to_string(N), f.F_plus.str(),
                                      f.F_minus.str(), f.F_stab.str()};
    });
  } else if (formula == "u" || formula == "v") {
    t.columns = {"N", formula + "_minus", formula + "_plus"};
    t.rows = parallel_map(static_cast<std::size_t>(n_range.size()), [&](std::size_t idx) {
      long N = n_range.lo + static_cast<long>(idx);
      ShiftCoeffs s = shift_coeffs(N);
      if (formula == "u")
        return std::vector<std::string>{std::to_string(N), s.u_minus.str(), s.u_plus.str()};
      return std::vector<std::string>{std::to_string(N), s.v_minus.str(), s.v_plus.str()};
    });
  } else if (formula == "alpha") {
    t.columns = {"N", "r", "alpha"};
    std::vector<std::pair<long, long>> grid;
    for (long N = n_range.lo; N <= n_range.hi; ++N)
      for (long r = 1; r <= N; ++r) grid.emplace_back(N, r);
    t.rows = parallel_map(grid.size(), [&](std::size_t idx) {
      auto [N, r] = grid[idx];
      return std::vector<std::string>{std::to_string(N), std::to_string(r),
                                      structural_alpha(N, r).str()};
    });
  } else if (formula == "beta") {
    t.columns = {"N", "beta", "a_N"};
    t.rows = parallel_map(static_cast<std::size_t>(n_range.size()), [&](std::size_t idx) {
      long N = n_range.lo + static_cast<long>(idx);
      return std::vector<std::string>{std::to_string(N), structural_beta(N).str(),
                                      structural_a_N(N).str()};
    });
  } else {
    throw std::invalid_argument("unknown formula '" + formula + "' (expected F|u|v|alpha|beta)");
  }
  return t;
}

}  // namespace griff
