#include "pshadow/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

#include "pshadow/linalg.hpp"

namespace pshadow {

bool ps2_holds(const SkewIntMatrix& a) {
  const auto& m = a.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const bool pos = (m.row(i).array() > 0).any();
    const bool neg = (m.row(i).array() < 0).any();
    if (pos != neg) return false;
  }
  return true;
}

std::optional<std::string> tame_row_violation(std::span<const Int> row, const TameFilter& filter) {
  int pos = 0, neg = 0, ones = 0, minus_ones = 0;
  bool two = false, minus_two = false;
  for (Int v : row) {
    if (v > filter.max_abs_entry || v < -filter.max_abs_entry) return "T1";
    pos += v > 0;
    neg += v < 0;
    ones += v == 1;
    minus_ones += v == -1;
    two |= v == 2;
    minus_two |= v == -2;
  }
  if ((two && pos > 1) || (minus_two && neg > 1)) return "T2";
  if (ones > filter.max_ones_per_row || minus_ones > filter.max_ones_per_row) return "T3";
  return std::nullopt;
}

bool tame_row_ok(std::span<const Int> row, const TameFilter& filter) {
  return !tame_row_violation(row, filter).has_value();
}

bool tame_ok(const SkewIntMatrix& a, const TameFilter& filter) {
  const auto& m = a.matrix();
  std::vector<Int> row(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
    if (!tame_row_ok(row, filter)) return false;
  }
  return true;
}

std::optional<std::string> shadow_violation(const SkewIntMatrix& a, const TameFilter& filter) {
  const auto& m = a.matrix();
  std::vector<Int> row(static_cast<std::size_t>(m.cols()));
  std::optional<std::string> worst;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
    // Report the earliest condition in T1 < T2 < T3 order over all rows.
    if (auto v = tame_row_violation(row, filter); v && (!worst || *v < *worst)) worst = v;
  }
  if (worst) return worst;
  if (!is_singular(a)) return "PS1";
  if (!ps2_holds(a)) return "PS2";
  if (!is_feasible(ps3_decide(a))) return "PS3";
  return std::nullopt;
}

namespace {

constexpr int kMaxN = 10;
// Orbit caching stores n! keys per class; beyond this size it costs more
// memory than the canonicalizations it saves.
constexpr int kOrbitCacheMaxN = 6;

// Counters for the monotone tameness conditions of one partially filled row.
struct RowCounts {
  int pos = 0, neg = 0, ones = 0, minus_ones = 0, twos = 0, minus_twos = 0;

  void add(int v, int sign) {
    pos += sign * (v > 0);
    neg += sign * (v < 0);
    ones += sign * (v == 1);
    minus_ones += sign * (v == -1);
    twos += sign * (v == 2);
    minus_twos += sign * (v == -2);
  }
  bool violates(const TameFilter& f) const {
    return (twos > 0 && pos > 1) || (minus_twos > 0 && neg > 1) ||
           ones > f.max_ones_per_row || minus_ones > f.max_ones_per_row;
  }
  bool ps2_ok() const { return (pos > 0) == (neg > 0); }
};

std::string key_of(int n, const signed char* m) {
  std::string k(static_cast<std::size_t>(n * n), '\0');
  // Offset keeps std::string's unsigned byte order equal to integer order.
  for (int i = 0; i < n * n; ++i) k[static_cast<std::size_t>(i)] = static_cast<char>(m[i] + 64);
  return k;
}

std::vector<std::pair<int, int>> upper_cells(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  return cells;
}

struct Search {
  Search(int size, const TameFilter& f) : n(size), filter(f), cells(upper_cells(size)) {}

  int n;
  TameFilter filter;
  std::vector<std::pair<int, int>> cells;
  signed char a[kMaxN * kMaxN] = {};
  RowCounts rows[kMaxN] = {};

  // Partition collection (first row only) or full search.
  std::size_t stop_at = 0;
  std::vector<std::vector<signed char>>* prefixes = nullptr;

  std::set<std::string> canonical;
  std::unordered_set<std::string> seen;

  bool place(int i, int j, int v) {
    a[i * n + j] = static_cast<signed char>(v);
    a[j * n + i] = static_cast<signed char>(-v);
    rows[i].add(v, 1);
    rows[j].add(-v, 1);
    return !rows[i].violates(filter) && !rows[j].violates(filter);
  }
  void unplace(int i, int j) {
    const int v = a[i * n + j];
    rows[i].add(v, -1);
    rows[j].add(-v, -1);
    a[i * n + j] = 0;
    a[j * n + i] = 0;
  }

  bool singular() const {
    if (n % 2 == 1) return true;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = a[i * n + j];
    return rank(m) < n;
  }

  void accept() {
    const bool cache = n <= kOrbitCacheMaxN;
    std::string labeled;
    if (cache) {
      labeled = key_of(n, a);
      if (seen.count(labeled)) return;
    }
    signed char canon[kMaxN * kMaxN];
    int perm[kMaxN];
    detail::canonical_sequence(n, a, canon, perm);
    auto ckey = key_of(n, canon);
    if (cache) {
      // Record the whole orbit so later members skip canonicalization.
      std::vector<int> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      signed char img[kMaxN * kMaxN];
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) img[i * n + j] = canon[p[static_cast<std::size_t>(i)] * n + p[static_cast<std::size_t>(j)]];
        seen.insert(key_of(n, img));
      } while (std::next_permutation(p.begin(), p.end()));
    }
    canonical.insert(std::move(ckey));
  }

  void dfs(std::size_t pos) {
    if (prefixes != nullptr && pos == stop_at) {
      prefixes->emplace_back(a, a + n * n);
      return;
    }
    if (pos == cells.size()) {
      if (singular()) accept();
      return;
    }
    const auto [i, j] = cells[pos];
    const int bound = static_cast<int>(filter.max_abs_entry);
    for (int v = -bound; v <= bound; ++v) {
      const bool ok = place(i, j, v);
      // Row i is final once its last column is placed; row n-1 finishes
      // together with row n-2.
      const bool complete = ok && (j != n - 1 || (rows[i].ps2_ok() && (i != n - 2 || rows[j].ps2_ok())));
      if (complete) dfs(pos + 1);
      unplace(i, j);
    }
  }

  void load(const std::vector<signed char>& prefix) {
    for (int i = 0; i < n; ++i) rows[i] = RowCounts{};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        a[i * n + j] = 0;
        a[j * n + i] = 0;
        if (const int v = prefix[static_cast<std::size_t>(i * n + j)]; v != 0) place(i, j, v);
      }
  }
};

std::set<std::string> canonical_shades(int n, const EnumerationOptions& opts) {
  require_supported_size(n, "enumerate_shades");
  if (opts.workers < 1) throw InvalidArgument("worker count must be at least 1");
  if (opts.filter.max_abs_entry < 0 || opts.filter.max_abs_entry > 60) {
    throw InvalidArgument("max_abs_entry outside supported range");
  }

  // Partition the search by the completed first row.
  std::vector<std::vector<signed char>> prefixes;
  {
    Search s(n, opts.filter);
    s.stop_at = static_cast<std::size_t>(n - 1);
    s.prefixes = &prefixes;
    s.dfs(0);
  }

  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(prefixes.size())));
  std::vector<std::set<std::string>> results(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  auto run = [&](int w) {
    Search s(n, opts.filter);
    for (std::size_t k = next++; k < prefixes.size(); k = next++) {
      s.load(prefixes[k]);
      s.dfs(static_cast<std::size_t>(n - 1));
    }
    results[static_cast<std::size_t>(w)] = std::move(s.canonical);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  std::set<std::string> merged;
  for (auto& r : results) merged.merge(r);
  if (!opts.identify_opposite) return merged;

  // The shade conditions are invariant under negation, so the permutation
  // classes pair up; keep the smaller key of each pair.
  std::set<std::string> classes;
  std::vector<signed char> neg(static_cast<std::size_t>(n * n)), canon(neg.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (const auto& key : merged) {
    for (std::size_t i = 0; i < key.size(); ++i) neg[i] = static_cast<signed char>(-(key[i] - 64));
    detail::canonical_sequence(n, neg.data(), canon.data(), perm.data());
    auto other = key_of(n, canon.data());
    classes.insert(std::min(key, other));
  }
  return classes;
}

SkewIntMatrix decode(int n, const std::string& key) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<Int>(key[static_cast<std::size_t>(i * n + j)]) - 64;
  return SkewIntMatrix(std::move(m));
}

ShadowRecord make_shade(int n, const std::string& key) {
  ShadowRecord r;
  r.matrix = decode(n, key);
  r.n = n;
  r.rank = rank(r.matrix.matrix());
  r.kind = RecordKind::Shade;
  return r;
}

}  // namespace

SkewIntMatrix class_representative(const SkewIntMatrix& a, bool identify_opposite) {
  auto c = canonical_form(a).matrix;
  if (!identify_opposite) return c;
  auto d = canonical_form(SkewIntMatrix(-a.matrix())).matrix;
  return d < c ? d : c;
}

void enumerate_shades(int n, const EnumerationOptions& opts,
                      const std::function<void(const ShadowRecord&)>& sink) {
  for (const auto& key : canonical_shades(n, opts)) sink(make_shade(n, key));
}

void enumerate_shadows(int n, const EnumerationOptions& opts,
                       const std::function<void(const ShadowRecord&)>& sink) {
  for (const auto& key : canonical_shades(n, opts)) {
    ShadowRecord r = make_shade(n, key);
    auto decision = ps3_decide(r.matrix);
    if (auto* cert = std::get_if<Ps3Certificate>(&decision)) {
      r.certificate = std::move(*cert);
      r.kind = RecordKind::Shadow;
      sink(r);
    }
  }
}

std::vector<ShadowRecord> enumerate_shades(int n, const EnumerationOptions& opts) {
  std::vector<ShadowRecord> out;
  enumerate_shades(n, opts, [&](const ShadowRecord& r) { out.push_back(r); });
  return out;
}

std::vector<ShadowRecord> enumerate_shadows(int n, const EnumerationOptions& opts) {
  std::vector<ShadowRecord> out;
  enumerate_shadows(n, opts, [&](const ShadowRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace pshadow
