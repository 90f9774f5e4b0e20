#include "kites/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kites/error.hpp"
#include "kites/filter.hpp"

namespace kites {

namespace {

std::string serialize_relabeled(const FiniteResLat& g, const std::vector<int>& p) {
  const int n = g.size();
  std::string s;
  s.reserve(2 + 5 * n * n);
  s.push_back(static_cast<char>(n));
  s.push_back(static_cast<char>(p[g.unit()]));
  const Table* tables[5] = {&g.meet_table(), &g.join_table(), &g.mul_table(),
                            &g.ldiv_table(), &g.rdiv_table()};
  std::vector<char> buf(static_cast<size_t>(n) * n);
  for (const Table* t : tables) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        buf[static_cast<size_t>(p[x]) * n + p[y]] =
            static_cast<char>(p[(*t)[static_cast<size_t>(x) * n + y]]);
    s.append(buf.begin(), buf.end());
  }
  return s;
}

// Derive residual tables as maxima of the adjointness solution sets; the
// caller is expected to validate the result with verify_axioms.
FiniteResLat from_mul(int n, int e, const Table& meet, const Table& join,
                      const Table& mul) {
  auto leq = [&](int x, int y) { return meet[static_cast<size_t>(x) * n + y] == x; };
  Table ldiv(static_cast<size_t>(n) * n), rdiv(static_cast<size_t>(n) * n);
  auto max_of = [&](const std::vector<int>& s, const char* what) {
    for (int m : s) {
      bool top = true;
      for (int y : s) top = top && leq(y, m);
      if (top) return m;
    }
    throw StructuralError(std::string("residual has no maximum (") + what + ")");
  };
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      std::vector<int> sl, sr;
      for (int y = 0; y < n; ++y) {
        if (leq(mul[static_cast<size_t>(x) * n + y], z)) sl.push_back(y);
        if (leq(mul[static_cast<size_t>(y) * n + x], z)) sr.push_back(y);
      }
      ldiv[static_cast<size_t>(x) * n + z] = max_of(sl, "ldiv");
      // rdiv(z, y) with y = x here: stored at row z, column x.
      rdiv[static_cast<size_t>(z) * n + x] = max_of(sr, "rdiv");
    }
  return FiniteResLat(n, e, meet, join, mul, ldiv, rdiv);
}

FiniteResLat chain_from_mul(int n, const Table& mul) {
  Table meet(static_cast<size_t>(n) * n), join(meet.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      meet[static_cast<size_t>(x) * n + y] = std::min(x, y);
      join[static_cast<size_t>(x) * n + y] = std::max(x, y);
    }
  return from_mul(n, n - 1, meet, join, mul);
}

}  // namespace

std::string canonical_form(const FiniteResLat& g) {
  const int n = g.size();
  if (n > 8) throw DomainError("canonical_form supports at most 8 elements");
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s = serialize_relabeled(g, p);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::optional<std::vector<int>> lattice_isomorphism(const FiniteResLat& a,
                                                    const FiniteResLat& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n > 8) throw DomainError("lattice_isomorphism supports at most 8 elements");
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[a.unit()] != b.unit()) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        ok = p[a.meet(x, y)] == b.meet(p[x], p[y]) &&
             p[a.join(x, y)] == b.join(p[x], p[y]) &&
             p[a.mul(x, y)] == b.mul(p[x], p[y]) &&
             p[a.ldiv(x, y)] == b.ldiv(p[x], p[y]) &&
             p[a.rdiv(x, y)] == b.rdiv(p[x], p[y]);
      }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

std::vector<FiniteResLat> enumerate_residuated_lattices(int n) {
  if (n < 1 || n > 4) throw DomainError("enumeration supported for sizes 1 to 4");
  std::vector<FiniteResLat> out;
  std::set<std::string> seen;

  // Unordered pairs; each gets one of: incomparable, i < j, j < i.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  long combos = 1;
  for (size_t k = 0; k < pairs.size(); ++k) combos *= 3;

  for (long code = 0; code < combos; ++code) {
    std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    long c = code;
    for (auto [i, j] : pairs) {
      int tri = static_cast<int>(c % 3);
      c /= 3;
      if (tri == 1) leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
      if (tri == 2) leq[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int d = 0; d < n && transitive; ++d)
          if (leq[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
              leq[static_cast<size_t>(b)][static_cast<size_t>(d)] &&
              !leq[static_cast<size_t>(a)][static_cast<size_t>(d)])
            transitive = false;
    if (!transitive) continue;

    // Lattice structure: every pair needs a greatest lower and least upper bound.
    Table meet(static_cast<size_t>(n) * n, -1), join(meet.size(), -1);
    bool lattice = true;
    for (int x = 0; x < n && lattice; ++x)
      for (int y = 0; y < n && lattice; ++y) {
        int m = -1, j = -1;
        for (int z = 0; z < n; ++z) {
          if (leq[static_cast<size_t>(z)][static_cast<size_t>(x)] &&
              leq[static_cast<size_t>(z)][static_cast<size_t>(y)]) {
            bool greatest = true;
            for (int w = 0; w < n; ++w)
              if (leq[static_cast<size_t>(w)][static_cast<size_t>(x)] &&
                  leq[static_cast<size_t>(w)][static_cast<size_t>(y)] &&
                  !leq[static_cast<size_t>(w)][static_cast<size_t>(z)])
                greatest = false;
            if (greatest) m = z;
          }
          if (leq[static_cast<size_t>(x)][static_cast<size_t>(z)] &&
              leq[static_cast<size_t>(y)][static_cast<size_t>(z)]) {
            bool least = true;
            for (int w = 0; w < n; ++w)
              if (leq[static_cast<size_t>(x)][static_cast<size_t>(w)] &&
                  leq[static_cast<size_t>(y)][static_cast<size_t>(w)] &&
                  !leq[static_cast<size_t>(z)][static_cast<size_t>(w)])
                least = false;
            if (least) j = z;
          }
        }
        if (m < 0 || j < 0) {
          lattice = false;
        } else {
          meet[static_cast<size_t>(x) * n + y] = m;
          join[static_cast<size_t>(x) * n + y] = j;
        }
      }
    if (!lattice) continue;

    int e = -1;
    for (int t = 0; t < n; ++t) {
      bool top = true;
      for (int x = 0; x < n; ++x) top = top && leq[static_cast<size_t>(x)][static_cast<size_t>(t)];
      if (top) e = t;
    }
    if (e < 0) continue;

    // Backtrack over monoid tables: unit row/column forced, products bounded
    // by the meet, monotone in both arguments, associative where defined.
    Table mul(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) {
      mul[static_cast<size_t>(x) * n + e] = x;
      mul[static_cast<size_t>(e) * n + x] = x;
    }
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != e && y != e) cells.emplace_back(x, y);

    auto assoc_ok = [&]() {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int ab = mul[static_cast<size_t>(a) * n + b];
          for (int d = 0; d < n; ++d) {
            int bd = mul[static_cast<size_t>(b) * n + d];
            if (ab < 0 || bd < 0) continue;
            int l = mul[static_cast<size_t>(ab) * n + d];
            int r = mul[static_cast<size_t>(a) * n + bd];
            if (l >= 0 && r >= 0 && l != r) return false;
          }
        }
      return true;
    };
    auto monotone_ok = [&](int x, int y, int v) {
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < n; ++y2) {
          int w = mul[static_cast<size_t>(x2) * n + y2];
          if (w < 0) continue;
          if (leq[static_cast<size_t>(x2)][static_cast<size_t>(x)] &&
              leq[static_cast<size_t>(y2)][static_cast<size_t>(y)] &&
              !leq[static_cast<size_t>(w)][static_cast<size_t>(v)])
            return false;
          if (leq[static_cast<size_t>(x)][static_cast<size_t>(x2)] &&
              leq[static_cast<size_t>(y)][static_cast<size_t>(y2)] &&
              !leq[static_cast<size_t>(v)][static_cast<size_t>(w)])
            return false;
        }
      return true;
    };

    auto emit = [&]() {
      FiniteResLat g = [&]() {
        try {
          return from_mul(n, e, meet, join, mul);
        } catch (const StructuralError&) {
          return FiniteResLat();  // trivial sentinel; filtered below
        }
      }();
      if (g.size() != n) return;
      if (!verify_axioms(g).pass) return;
      std::string key = canonical_form(g);
      if (seen.insert(key).second) out.push_back(std::move(g));
    };

    auto search = [&](auto&& self, size_t idx) -> void {
      if (idx == cells.size()) {
        emit();
        return;
      }
      auto [x, y] = cells[idx];
      int bound = meet[static_cast<size_t>(x) * n + y];
      for (int v = 0; v < n; ++v) {
        if (!leq[static_cast<size_t>(v)][static_cast<size_t>(bound)]) continue;
        if (!monotone_ok(x, y, v)) continue;
        mul[static_cast<size_t>(x) * n + y] = v;
        if (assoc_ok()) self(self, idx + 1);
        mul[static_cast<size_t>(x) * n + y] = -1;
      }
    };
    search(search, 0);
  }

  std::sort(out.begin(), out.end(), [](const FiniteResLat& a, const FiniteResLat& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

FiniteResLat trivial_lattice() { return FiniteResLat(); }

FiniteResLat chain2() { return lukasiewicz_chain(2); }

FiniteResLat lukasiewicz_chain(int n) {
  if (n < 2) throw DomainError("lukasiewicz_chain needs at least 2 elements");
  Table mul(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[static_cast<size_t>(x) * n + y] = std::max(x + y - (n - 1), 0);
  return chain_from_mul(n, mul);
}

FiniteResLat godel_chain(int n) {
  if (n < 2) throw DomainError("godel_chain needs at least 2 elements");
  Table mul(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[static_cast<size_t>(x) * n + y] = std::min(x, y);
  return chain_from_mul(n, mul);
}

FiniteResLat boolean_2x2() { return direct_product({chain2(), chain2()}); }

FiniteResLat nc4() {
  // 0 < a=1 < b=2 < e=3.
  Table mul = {0, 0, 0, 0,   // 0·y
               0, 0, 0, 1,   // a·y: aa=0, ab=0
               0, 1, 2, 2,   // b·y: ba=a, bb=b
               0, 1, 2, 3};  // e·y
  return chain_from_mul(4, mul);
}

FiniteResLat nd4() {
  Table mul = {0, 0, 0, 0,  //
               0, 0, 0, 1,  //
               0, 0, 0, 2,  //
               0, 1, 2, 3};
  return chain_from_mul(4, mul);
}

FiniteResLat nonprelinear5() {
  // 0 < a=1, b=2 (incomparable) < m=3 < e=4; product is the meet.
  const int n = 5;
  auto pleq = [](int x, int y) {
    if (x == y || x == 0 || y == 4) return true;
    if (y == 3) return x == 1 || x == 2;
    return false;
  };
  Table meet(25), join(25);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = -1, j = -1;
      for (int z = 0; z < n; ++z) {
        if (pleq(z, x) && pleq(z, y) && (m < 0 || pleq(m, z))) m = z;
        if (pleq(x, z) && pleq(y, z) && (j < 0 || pleq(z, j))) j = z;
      }
      meet[static_cast<size_t>(x) * n + y] = m;
      join[static_cast<size_t>(x) * n + y] = j;
    }
  return from_mul(n, 4, meet, join, meet);
}

std::vector<std::pair<std::string, FiniteResLat>> builtin_lattices() {
  return {
      {"trivial", trivial_lattice()},
      {"chain2", chain2()},
      {"l3", lukasiewicz_chain(3)},
      {"g3", godel_chain(3)},
      {"l4", lukasiewicz_chain(4)},
      {"g4", godel_chain(4)},
      {"b22", boolean_2x2()},
      {"nc4", nc4()},
      {"nd4", nd4()},
      {"nonprelinear5", nonprelinear5()},
  };
}

std::optional<FiniteResLat> builtin_lattice(const std::string& name) {
  for (auto& [key, g] : builtin_lattices())
    if (key == name) return g;
  return std::nullopt;
}

}  // namespace kites
