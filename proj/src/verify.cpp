#include "pshadow/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pshadow {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Report cartan_identity_check(const Quiver& q, const IntMatrix& c) {
  const int n = q.size();
  if (c.rows() != n || c.cols() != n) throw InvalidArgument("Cartan candidate has the wrong size");
  if (c != c.transpose()) throw InvalidArgument("Cartan candidate is not symmetric");
  if ((c.array() < 0).any()) throw InvalidArgument("Cartan candidate has a negative entry");

  const IntMatrix& arr = q.arr();
  const IntMatrix product = (arr - arr.transpose()) * c;
  Report report;

  std::ostringstream nonzero;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (product(i, k) != 0) nonzero << " (" << i << "," << k << ")=" << product(i, k);
  report.checks.push_back({"identity", product.isZero(),
                           product.isZero() ? "signed adjacency times C is zero" : "nonzero at" + nonzero.str()});

  // Arrows into i and out of i, weighted by column k of C, must balance.
  std::ostringstream unbalanced;
  bool balanced = true;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Int into = 0, out_of = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        into += arr(j, i) * c(k, j);
        out_of += arr(i, j) * c(k, j);
      }
      if (into != out_of) {
        balanced = false;
        unbalanced << " vertex " << i << " row " << k << " (" << into << " in, " << out_of << " out)";
      }
    }
  }
  report.checks.push_back({"vertex-balance", balanced, balanced ? "all balanced" : "unbalanced:" + unbalanced.str()});
  return report;
}

int rational_rank(const IntMatrix& m) {
  const auto rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)].emplace_back(m(i, j));
  int r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    auto pivot = static_cast<std::size_t>(r);
    while (pivot < a.size() && a[pivot][static_cast<std::size_t>(col)] == Rational(0)) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(r)]);
    const auto& prow = a[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < a.size(); ++i) {
      const Rational f = a[i][static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      if (f == Rational(0)) continue;
      for (std::size_t j = static_cast<std::size_t>(col); j < static_cast<std::size_t>(cols); ++j) a[i][j] = a[i][j] - f * prow[j];
    }
    ++r;
  }
  return r;
}

namespace {

std::string row_text(const IntMatrix& m, Eigen::Index i) {
  std::ostringstream s;
  s << "row " << i << " [";
  for (Eigen::Index j = 0; j < m.cols(); ++j) s << (j ? " " : "") << m(i, j);
  s << "]";
  return s.str();
}

Check skew_check(const IntMatrix& m) {
  if (m.rows() != m.cols()) return {"skew", false, "not square"};
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return {"skew", false, "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and transpose disagree"};
  return {"skew", true, ""};
}

Check tame_check(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int pos = 0, neg = 0, ones = 0, minus_ones = 0;
    bool two = false, minus_two = false;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Int v = m(i, j);
      if (v < -2 || v > 2) return {"tame", false, row_text(m, i) + " leaves [-2, 2]"};
      if (v > 0) ++pos;
      if (v < 0) ++neg;
      if (v == 1) ++ones;
      if (v == -1) ++minus_ones;
      if (v == 2) two = true;
      if (v == -2) minus_two = true;
    }
    if ((two && pos != 1) || (minus_two && neg != 1)) return {"tame", false, row_text(m, i) + " has a 2 beside a same-signed entry"};
    if (ones > 4 || minus_ones > 4) return {"tame", false, row_text(m, i) + " has more than four unit entries of one sign"};
  }
  return {"tame", true, ""};
}

Check sign_check(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Int lo = m.row(i).minCoeff(), hi = m.row(i).maxCoeff();
    if ((lo < 0) != (hi > 0)) return {"ps2", false, row_text(m, i) + " is single-signed"};
  }
  return {"ps2", true, ""};
}

// Least row-major image over every relabeling, found by plain enumeration.
std::vector<Int> least_image(const IntMatrix& m) {
  const auto n = static_cast<int>(m.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Int> best, seq(static_cast<std::size_t>(n * n));
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) seq[static_cast<std::size_t>(i * n + j)] = m(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    if (best.empty() || seq < best) best = seq;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

Check canonical_check(const IntMatrix& m, bool identify_opposite) {
  const auto n = static_cast<int>(m.rows());
  if (n > 9) return {"canonical", false, "too large for the brute-force check"};
  auto best = least_image(m);
  if (identify_opposite) best = std::min(best, least_image(-m));
  std::vector<Int> own(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) own[static_cast<std::size_t>(i * n + j)] = m(i, j);
  if (own == best) return {"canonical", true, ""};
  return {"canonical", false, "a relabeling gives a lexicographically smaller matrix"};
}

Check certificate_check(const IntMatrix& a, const IntMatrix& c) {
  const auto n = a.rows();
  if (c.rows() != n || c.cols() != n) return {"certificate", false, "wrong size"};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (c(i, j) < 0) return {"certificate", false, "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
      if (c(i, j) != c(j, i)) return {"certificate", false, "not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  for (Eigen::Index j = 0; j < n; ++j) {
    bool any = false;
    for (Eigen::Index i = 0; i < n; ++i) any |= c(i, j) != 0;
    if (!any) return {"certificate", false, "column " + std::to_string(j) + " is zero"};
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      Int s = 0;
      for (Eigen::Index j = 0; j < n; ++j) s += a(i, j) * c(j, k);
      if (s != 0) return {"certificate", false, "A*C nonzero at (" + std::to_string(i) + "," + std::to_string(k) + ")"};
    }
  return {"certificate", true, ""};
}

}  // namespace

Report audit_record(const ShadowRecord& r, bool identify_opposite) {
  const IntMatrix& m = r.matrix.matrix();
  Report report;
  report.checks.push_back({"size", m.rows() == r.n, "n = " + std::to_string(r.n)});
  report.checks.push_back(skew_check(m));
  report.checks.push_back(tame_check(m));
  const int rk = rational_rank(m);
  report.checks.push_back({"rank", rk == r.rank, "recomputed " + std::to_string(rk) + ", claimed " + std::to_string(r.rank)});
  report.checks.push_back({"ps1", rk < m.rows(), "rank " + std::to_string(rk)});
  report.checks.push_back(sign_check(m));
  report.checks.push_back(canonical_check(m, identify_opposite));
  if (r.kind == RecordKind::Shadow) {
    if (!r.certificate) {
      report.checks.push_back({"certificate", false, "shadow record without certificate"});
    } else {
      report.checks.push_back(certificate_check(m, r.certificate->c));
    }
  }
  return report;
}

}  // namespace pshadow
