#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "flex/io.hpp"

namespace flex {

using ordered_json = nlohmann::ordered_json;

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& items, const std::string& sep, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += fmt(items[i]);
  }
  return out;
}

std::vector<EpsScalar> entries(const EpsVector& v) { return {v.data(), v.data() + v.size()}; }

ordered_json eps_json(const EpsScalar& f, bool exact) {
  if (!exact) return f.str();
  auto coeffs = [](const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p[i].get_str());
    return arr;
  };
  ordered_json o;
  o["num"] = coeffs(f.numerator());
  o["den"] = coeffs(f.denominator());
  o["shift"] = f.shift();
  return o;
}

ordered_json vec_json(const EpsVector& v, bool exact) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(eps_json(v(i), exact));
  return arr;
}

ordered_json index_json(const std::vector<Eigen::Index>& idx) {
  ordered_json arr = ordered_json::array();
  for (auto i : idx) arr.push_back(i + 1);
  return arr;
}

// Right-aligned table of cells, optional "| rhs" column.
std::string table(const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& rhs) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (width.size() <= j) width.resize(j + 1, 0);
      width[j] = std::max(width[j], r[j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += " ";
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      out += " " + std::string(width[j] - rows[i][j].size(), ' ') + rows[i][j];
    if (!rhs.empty()) out += " | " + rhs[i];
    out += "\n";
  }
  return out;
}

template <typename M>
std::vector<std::vector<std::string>> cells(const M& m) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j).str());
  return out;
}

std::vector<std::string> ext_strings(const ExternalVector& v) {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_system(const FlexibleSystem& s) {
  std::string out;
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      if (j) out += " + ";
      out += "(" + s.A()(i, j).str() + ") " + s.names()[static_cast<std::size_t>(j)];
    }
    out += " in " + s.B()(i).str() + "\n";
  }
  return out;
}

std::string format_vector(const EpsVector& v) {
  return "(" + join(entries(v), ",", [](const EpsScalar& f) { return f.str(); }) + ")";
}

std::string format_solution_text(const SolutionSet& z) {
  if (!z.consistent())
    return "INCONSISTENT (rows: " +
           join(z.offending_rows, ", ", [](Eigen::Index i) { return std::to_string(i + 1); }) + ")";
  std::string out = format_vector(z.support);
  for (const auto& g : z.modular) out += " + " + g.neutrix.str() + "*" + format_vector(g.direction);
  for (const auto& w : z.linear) out += " + R*" + format_vector(w);
  return out;
}

std::string format_solution_json(const SolutionSet& z, bool exact, int indent) {
  ordered_json j;
  j["status"] = z.consistent() ? "consistent" : "inconsistent";
  j["rank"] = z.rank;
  j["support"] = z.consistent() ? vec_json(z.support, exact) : ordered_json::array();
  j["modular"] = ordered_json::array();
  for (const auto& g : z.modular) {
    ordered_json m;
    m["neutrix"] = g.neutrix.str();
    m["direction"] = vec_json(g.direction, exact);
    j["modular"].push_back(m);
  }
  j["linear"] = ordered_json::array();
  for (const auto& w : z.linear) j["linear"].push_back(vec_json(w, exact));
  j["permutation"] = index_json(z.permutation);
  j["offending_rows"] = index_json(z.offending_rows);
  return j.dump(indent);
}

std::string format_integrated(const IntegratedSystem& sys) {
  std::ostringstream os;
  os << "integrated system (m=" << sys.m << ", k=" << sys.k() << "):\n";
  os << table(cells(sys.P), ext_strings(sys.rhs));
  return os.str();
}

std::string format_echelon(const EchelonSystem& e) {
  std::ostringstream os;
  os << "echelon system (r=" << e.r << "):\n" << table(cells(e.Q), ext_strings(e.C));
  os << "H: ";
  for (std::size_t k = 0; k < e.perm.size(); ++k)
    os << (k ? ", " : "") << "y" << k + 1 << "=x" << e.perm[k] + 1;
  os << "\nr: " << e.r << "\n";
  return os.str();
}

std::string format_echelon_json(const IntegratedSystem& sys, const EchelonSystem& e, bool exact, int indent) {
  auto matrix = [&](const EpsMatrix& m) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) arr.push_back(vec_json(m.row(i).transpose(), exact));
    return arr;
  };
  auto rhs = [](const ExternalVector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i).str());
    return arr;
  };
  ordered_json j;
  j["integrated"] = {{"P", matrix(sys.P)}, {"rhs", rhs(sys.rhs)}, {"m", sys.m}, {"k", sys.k()}};
  j["echelon"] = {{"Q", matrix(e.Q)}, {"C", rhs(e.C)}};
  j["permutation"] = index_json(e.perm);
  j["rank"] = e.r;
  return j.dump(indent);
}

std::string format_feasibility(const FlexibleSystem& s, const IntegratedSystem& sys, const std::string& verdict) {
  const auto f = feasibility_space(s);
  std::string out = "F: (" + join(f, ", ", [](const Neutrix& n) { return n.str(); }) + ")\n";
  out += "constraint matrix (k=" + std::to_string(sys.k()) + "):\n";
  const Eigen::Index k = sys.k();
  if (k == 0)
    out += "  (none)\n";
  else
    out += table(cells(EpsMatrix(sys.P.bottomRows(k))), ext_strings(ExternalVector(sys.rhs.tail(k))));
  if (!verdict.empty()) out += "verdict: " + verdict + "\n";
  return out;
}

std::string format_feasibility_json(const FlexibleSystem& s, const IntegratedSystem& sys, const std::string& verdict,
                                    int indent) {
  ordered_json j;
  j["F"] = ordered_json::array();
  for (const auto& n : feasibility_space(s)) j["F"].push_back(n.str());
  j["constrained_columns"] = index_json(sys.constrained_columns);
  j["constraints"] = ordered_json::array();
  for (const auto& n : sys.F_constraint) j["constraints"].push_back(n.str());
  if (!verdict.empty()) j["verdict"] = verdict;
  return j.dump(indent);
}

std::string format_robustness(const RobustnessReport& r) {
  std::ostringstream os;
  os << "d: " << r.d.str() << "\n";
  os << "d_j: (" << join(r.d_columns, ", ", [](const EpsScalar& f) { return f.str(); }) << ")\n";
  os << "E:\n" << table(cells(r.E), {});
  os << "R:\n" << table(cells(r.R), {});
  os << "preconditions:\n";
  os << "  determinant not an absorber: " << yes_no(r.preconditions.det_not_absorber) << "\n";
  os << "  row quotients cover max B: ";
  for (std::size_t i = 0; i < r.preconditions.row_quotient_covers.size(); ++i)
    os << (i ? " " : "") << yes_no(r.preconditions.row_quotient_covers[i]);
  os << "\n  d + max E zeroless: " << yes_no(r.preconditions.det_plus_error_zeroless) << "\n";
  os << "verified equivalent: " << yes_no(r.verified_equivalent) << "\n";
  return os.str();
}

std::string format_robustness_json(const RobustnessReport& r, int indent) {
  auto grid = [](const auto& m) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
      arr.push_back(row);
    }
    return arr;
  };
  ordered_json j;
  j["d"] = r.d.str();
  j["d_columns"] = ordered_json::array();
  for (const auto& f : r.d_columns) j["d_columns"].push_back(f.str());
  j["E"] = grid(r.E);
  j["R"] = grid(r.R);
  ordered_json pre;
  pre["det_not_absorber"] = r.preconditions.det_not_absorber;
  pre["row_quotient_covers"] = r.preconditions.row_quotient_covers;
  pre["det_plus_error_zeroless"] = r.preconditions.det_plus_error_zeroless;
  j["preconditions"] = pre;
  j["verified_equivalent"] = r.verified_equivalent;
  return j.dump(indent);
}

}  // namespace flex
