#include "eck/dehntwist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eck {

namespace {

long long floor_div(long long a, long long b) {
  // b > 0 throughout this module.
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

SlopeQ make_slope(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("slope with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g == 0) g = 1;
  return SlopeQ{p / g, q / g};
}

int cmp(const SlopeQ& a, const SlopeQ& b) {
  long long lhs = a.p * b.q, rhs = b.p * a.q;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

bool operator==(const SlopeQ& a, const SlopeQ& b) { return cmp(a, b) == 0; }
bool operator<(const SlopeQ& a, const SlopeQ& b) { return cmp(a, b) < 0; }

std::string to_string(const SlopeQ& s) {
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

bool SlopeInterval::contains(const SlopeQ& s) const {
  int cl = cmp(s, lo.slope);
  if (cl < 0 || (cl == 0 && lo.eps >= 0)) return false;
  int ch = cmp(s, hi.slope);
  if (ch > 0 || (ch == 0 && hi.eps <= 0)) return false;
  return true;
}

SlopeInterval twist_interval(int n) {
  if (n < 1) throw std::invalid_argument("twist interval needs n >= 1");
  return SlopeInterval{{make_slope(0, 1), -1}, {make_slope(1, n), +1}};
}

bool operator==(const PathMonomial& a, const PathMonomial& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const PathEntry &x = a.entries[i], &y = b.entries[i];
    if (!(x.slope == y.slope) || x.hyperbolic != y.hyperbolic ||
        x.mult != y.mult)
      return false;
  }
  return true;
}

bool operator<(const PathMonomial& a, const PathMonomial& b) {
  return to_string(a) < to_string(b);
}

PathMonomial canonicalize(std::vector<PathEntry> entries) {
  // slope -> (e multiplicity, h count), ordered by slope.
  std::map<std::pair<long long, long long>, std::pair<int, int>> acc;
  auto key = [](const SlopeQ& s) {
    return std::pair<long long, long long>{s.p, s.q};
  };
  std::map<std::pair<long long, long long>, SlopeQ> slopes;
  for (auto& e : entries) {
    if (e.mult <= 0) throw std::invalid_argument("nonpositive multiplicity");
    auto k = key(e.slope);
    slopes.emplace(k, e.slope);
    if (e.hyperbolic) {
      if (e.mult != 1 || acc[k].second)
        throw std::invalid_argument("hyperbolic multiplicity above 1 at slope " +
                                    to_string(e.slope));
      acc[k].second = 1;
    } else {
      acc[k].first += e.mult;
    }
  }
  // Map keys (p, q) sort by p first, not by slope value; rebuild sorted.
  std::vector<std::pair<SlopeQ, std::pair<int, int>>> items;
  for (auto& [k, v] : acc) items.push_back({slopes.at(k), v});
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  PathMonomial g;
  for (auto& [s, em] : items) {
    if (em.first > 0) g.entries.push_back({s, false, em.first});
    if (em.second) g.entries.push_back({s, true, 1});
  }
  return g;
}

std::string to_string(const PathMonomial& g) {
  std::vector<std::pair<std::string, int>> names;
  for (auto& e : g.entries)
    names.push_back({std::string(e.hyperbolic ? "h" : "e") + "_{" +
                         to_string(e.slope) + "}",
                     e.mult});
  std::sort(names.begin(), names.end());
  if (names.empty()) return "1";
  std::string s;
  for (auto& [n, m] : names) {
    if (!s.empty()) s += "·";
    s += n;
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

std::vector<std::pair<long long, long long>> path_points(
    const PathMonomial& g) {
  std::vector<std::pair<long long, long long>> pts{{0, 0}};
  for (auto& e : g.entries)
    pts.push_back({pts.back().first + e.mult * e.slope.q,
                   pts.back().second + e.mult * e.slope.p});
  return pts;
}

std::pair<long long, long long> endpoint(const PathMonomial& g) {
  return path_points(g).back();
}

int hyperbolic_count(const PathMonomial& g) {
  int h = 0;
  for (auto& e : g.entries)
    if (e.hyperbolic) ++h;
  return h;
}

std::vector<PathMonomial> enumerate_generators(const SlopeInterval& iv,
                                               long long P, long long Q) {
  if (Q < 0) return {};
  if (Q == 0)
    return P == 0 ? std::vector<PathMonomial>{PathMonomial{}}
                  : std::vector<PathMonomial>{};
  // Available slopes p/q in lowest terms, q <= Q, inside the interval.
  std::vector<SlopeQ> slopes;
  for (long long q = 1; q <= Q; ++q) {
    long long p_lo = floor_div(iv.lo.slope.p * q, iv.lo.slope.q) - 1;
    long long p_hi = ceil_div(iv.hi.slope.p * q, iv.hi.slope.q) + 1;
    for (long long p = p_lo; p <= p_hi; ++p) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      SlopeQ s{p, q};
      if (iv.contains(s)) slopes.push_back(s);
    }
  }
  std::sort(slopes.begin(), slopes.end());
  int nslopes = static_cast<int>(slopes.size());

  std::vector<PathMonomial> out;
  std::vector<PathEntry> cur;
  // DFS over ascending slopes; at each slope choose a total multiplicity m
  // and whether one of the m strands is the hyperbolic orbit.
  auto rec = [&](auto&& self, int idx, long long rq, long long rp) -> void {
    if (rq == 0) {
      if (rp == 0) out.push_back(canonicalize(cur));
      return;
    }
    if (idx == nslopes) return;
    // Feasibility: remaining slopes are ascending, so rp/rq must lie between
    // slopes[idx] and the maximal slope.
    if (rp * slopes[idx].q < rq * slopes[idx].p) return;
    const SlopeQ& smax = slopes[nslopes - 1];
    if (rp * smax.q > rq * smax.p) return;
    const SlopeQ& s = slopes[idx];
    for (long long m = 0; m * s.q <= rq; ++m) {
      for (int h = 0; h <= (m > 0 ? 1 : 0); ++h) {
        std::size_t mark = cur.size();
        if (m - h > 0)
          cur.push_back({s, false, static_cast<int>(m - h)});
        if (h) cur.push_back({s, true, 1});
        self(self, idx + 1, rq - m * s.q, rp - m * s.p);
        cur.resize(mark);
      }
    }
  };
  rec(rec, 0, Q, P);
  return out;
}

std::vector<PathRun> runs(const PathMonomial& g) {
  std::vector<PathRun> rs;
  for (auto& e : g.entries) {
    if (!rs.empty() && rs.back().slope == e.slope) {
      if (e.hyperbolic)
        rs.back().h = true;
      else
        rs.back().emult += e.mult;
    } else {
      PathRun r;
      r.slope = e.slope;
      if (e.hyperbolic)
        r.h = true;
      else
        r.emult = e.mult;
      rs.push_back(r);
    }
  }
  return rs;
}

namespace {

using Point = std::pair<long long, long long>;

long long cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

// Lattice points of the closed triangle A, C, B minus the peg C, then the
// lower convex hull from A to B. Valid since every slope has q >= 1, so x
// strictly increases along paths.
std::vector<Point> rounded_hull(const Point& A, const Point& C,
                                const Point& B) {
  long long orient = cross(A, C, B);
  if (orient == 0)
    throw NoCorner("degenerate corner: runs are collinear");
  auto inside = [&](const Point& p) {
    long long s1 = cross(A, C, p), s2 = cross(C, B, p), s3 = cross(B, A, p);
    auto same = [&](long long s) { return orient > 0 ? s >= 0 : s <= 0; };
    return same(s1) && same(s2) && same(s3);
  };
  long long ymin = std::min({A.second, C.second, B.second});
  long long ymax = std::max({A.second, C.second, B.second});
  std::vector<Point> pts;
  for (long long x = A.first; x <= B.first; ++x)
    for (long long y = ymin; y <= ymax; ++y) {
      Point p{x, y};
      if (p != C && inside(p)) pts.push_back(p);
    }
  std::sort(pts.begin(), pts.end());
  std::vector<Point> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

struct RunSpan {
  std::size_t first_entry, last_entry;  // inclusive entry range of the run
};

std::vector<RunSpan> run_spans(const PathMonomial& g) {
  std::vector<RunSpan> spans;
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    if (!spans.empty() &&
        g.entries[spans.back().first_entry].slope == g.entries[i].slope)
      spans.back().last_entry = i;
    else
      spans.push_back({i, i});
  }
  return spans;
}

}  // namespace

std::vector<std::pair<SlopeQ, int>> rounded_region_edges(const PathMonomial& g,
                                                         int corner_index) {
  auto rs = runs(g);
  int ncorners = static_cast<int>(rs.size()) - 1;
  if (corner_index < 0 || corner_index >= ncorners)
    throw NoCorner("no corner at index " + std::to_string(corner_index) +
                   " (path has " + std::to_string(std::max(ncorners, 0)) +
                   " corners)");
  // Corner points from run lengths.
  Point A{0, 0};
  for (int k = 0; k < corner_index; ++k) {
    int len = rs[k].emult + (rs[k].h ? 1 : 0);
    A.first += len * rs[k].slope.q;
    A.second += len * rs[k].slope.p;
  }
  int len_l = rs[corner_index].emult + (rs[corner_index].h ? 1 : 0);
  Point C{A.first + len_l * rs[corner_index].slope.q,
          A.second + len_l * rs[corner_index].slope.p};
  int len_r = rs[corner_index + 1].emult + (rs[corner_index + 1].h ? 1 : 0);
  Point B{C.first + len_r * rs[corner_index + 1].slope.q,
          C.second + len_r * rs[corner_index + 1].slope.p};

  auto hull = rounded_hull(A, C, B);
  std::vector<std::pair<SlopeQ, int>> edges;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    long long dx = hull[i].first - hull[i - 1].first;
    long long dy = hull[i].second - hull[i - 1].second;
    long long m = std::gcd(dx, dy < 0 ? -dy : dy);
    edges.push_back({make_slope(dy / m, dx / m), static_cast<int>(m)});
  }
  return edges;
}

PathMonomial round_corner(const PathMonomial& g, int corner_index,
                          HSide h_side) {
  auto rs = runs(g);
  auto spans = run_spans(g);
  auto edges = rounded_region_edges(g, corner_index);  // validates the corner
  int chosen = corner_index + (h_side == HSide::Right ? 1 : 0);
  int other = corner_index + (h_side == HSide::Right ? 0 : 1);
  if (!rs[chosen].h)
    throw NoAdjacentH("run at slope " + to_string(rs[chosen].slope) +
                      " carries no h label");
  std::vector<PathEntry> entries;
  for (std::size_t i = 0; i < spans[corner_index].first_entry; ++i)
    entries.push_back(g.entries[i]);
  bool other_h = rs[other].h;
  for (auto& [s, m] : edges) {
    int em = m;
    if (other_h && s == rs[other].slope) {
      entries.push_back({s, true, 1});
      other_h = false;
      --em;
    }
    if (em > 0) entries.push_back({s, false, em});
  }
  if (other_h)
    throw RoundingAmbiguous(
        "the non-consumed h at slope " + to_string(rs[other].slope) +
        " has no edge of its slope in the rounded region");
  for (std::size_t i = spans[corner_index + 1].last_entry + 1;
       i < g.entries.size(); ++i)
    entries.push_back(g.entries[i]);
  return canonicalize(std::move(entries));
}

namespace {

// All beta obtainable by rounding some corner of alpha and redistributing one
// fewer h label on the new region edges. These are the differential
// incidences <d(beta), alpha> = 1 (mod-2 duplicates cancel in add_entry).
std::vector<PathMonomial> rounding_targets(const PathMonomial& alpha) {
  std::vector<PathMonomial> out;
  auto rs = runs(alpha);
  auto spans = run_spans(alpha);
  for (int c = 0; c + 1 < static_cast<int>(rs.size()); ++c) {
    int rh = (rs[c].h ? 1 : 0) + (rs[c + 1].h ? 1 : 0);
    if (rh == 0) continue;
    auto edges = rounded_region_edges(alpha, c);
    // Choose which region slopes carry the remaining rh - 1 h labels.
    std::vector<std::vector<int>> choices;
    if (rh == 1) {
      choices.push_back({});
    } else {
      for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        choices.push_back({i});
    }
    for (auto& S : choices) {
      std::vector<PathEntry> entries;
      for (std::size_t i = 0; i < spans[c].first_entry; ++i)
        entries.push_back(alpha.entries[i]);
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        auto& [s, m] = edges[i];
        bool put_h = std::find(S.begin(), S.end(), i) != S.end();
        if (put_h) entries.push_back({s, true, 1});
        if (m - (put_h ? 1 : 0) > 0)
          entries.push_back({s, false, m - (put_h ? 1 : 0)});
      }
      for (std::size_t i = spans[c + 1].last_entry + 1;
           i < alpha.entries.size(); ++i)
        entries.push_back(alpha.entries[i]);
      out.push_back(canonicalize(std::move(entries)));
    }
  }
  return out;
}

struct PfcData {
  std::vector<PathMonomial> gens;
  // Differential entries as index pairs (from, to) with the dual convention:
  // d(rounded) contains the cornered monomial.
  std::vector<std::pair<int, int>> entries;
};

PfcData build_pfc(const SlopeInterval& iv, long long P, long long Q) {
  PfcData data;
  data.gens = enumerate_generators(iv, P, Q);
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(data.gens.size()); ++i)
    index[to_string(data.gens[i])] = i;
  for (int a = 0; a < static_cast<int>(data.gens.size()); ++a) {
    for (auto& beta : rounding_targets(data.gens[a])) {
      auto it = index.find(to_string(beta));
      if (it == index.end())
        throw std::logic_error("rounding left the generator set: " +
                               to_string(beta));
      data.entries.push_back({it->second, a});
    }
  }
  return data;
}

void check_d_squared(const ChainComplex& c, const std::string& context) {
  for (auto& g : c.generators) {
    std::set<std::string> dd;
    for (auto& mid : c.d(g.id))
      for (auto& to : c.d(mid)) {
        auto it = dd.find(to);
        if (it != dd.end())
          dd.erase(it);
        else
          dd.insert(to);
      }
    if (!dd.empty())
      throw std::logic_error(context + ": d^2 != 0 at " + g.id + " -> " +
                             *dd.begin() + " — rounding-rule gap");
  }
}

}  // namespace

ChainComplex pfc_complex(const SlopeInterval& iv, long long P, long long Q) {
  PfcData data = build_pfc(iv, P, Q);
  ChainComplex c;
  for (auto& g : data.gens) {
    Generator gen;
    gen.id = to_string(g);
    gen.z2 = hyperbolic_count(g) % 2;
    c.add_generator(std::move(gen));
  }
  for (auto& [from, to] : data.entries)
    c.add_entry(c.generators[from].id, c.generators[to].id);
  check_d_squared(c, "pfc_complex");
  return c;
}

ClosedFormGenerators closed_form_generators(const SlopeInterval& iv,
                                            long long P, long long Q) {
  ClosedFormGenerators out;
  if (Q < 1 || !iv.contains(make_slope(P, Q))) return out;

  // Minimal admissible height over x: above the lo-line through (0,0) and the
  // hi-line through (Q,P), with strictness decided by the infinitesimals.
  auto ylo = [&](long long x) {
    const SlopeQ& s = iv.lo.slope;
    long long num = s.p * x;
    long long base = ceil_div(num, s.q);
    if (num % s.q == 0 && iv.lo.eps >= 0 && x > 0) return base + 1;
    return base;
  };
  auto yhi = [&](long long x) {
    const SlopeQ& s = iv.hi.slope;
    long long num = P * s.q + s.p * (x - Q);
    long long base = ceil_div(num, s.q);
    if (num % s.q == 0 && iv.hi.eps <= 0 && x < Q) return base + 1;
    return base;
  };
  std::vector<std::pair<long long, long long>> pts;
  for (long long x = 0; x <= Q; ++x)
    pts.push_back({x, std::max(ylo(x), yhi(x))});
  if (pts.front() != std::pair<long long, long long>{0, 0} ||
      pts.back() != std::pair<long long, long long>{Q, P})
    throw std::logic_error("closed-form path does not span (0,0) to (Q,P)");

  std::vector<std::pair<long long, long long>> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::vector<PathEntry> entries;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    long long dx = hull[i].first - hull[i - 1].first;
    long long dy = hull[i].second - hull[i - 1].second;
    long long m = std::gcd(dx, dy < 0 ? -dy : dy);
    entries.push_back({make_slope(dy / m, dx / m), false, static_cast<int>(m)});
  }
  out.nonempty = true;
  out.E = canonicalize(entries);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::vector<PathEntry> h_entries = entries;
    h_entries[i].mult -= 1;
    if (h_entries[i].mult == 0) h_entries.erase(h_entries.begin() + i);
    h_entries.push_back({entries[i].slope, true, 1});
    out.H.push_back(canonicalize(std::move(h_entries)));
  }
  return out;
}

ChainComplex augmented_complex(int n, int j_T, int p) {
  if (n < 1 || j_T < 0 || p < 0)
    throw std::invalid_argument("augmented_complex needs n >= 1, j_T >= 0, p >= 0");
  SlopeInterval iv = twist_interval(n);
  auto decorate = [](const PathMonomial& g) {
    std::vector<std::pair<std::string, int>> names{{"h+", 1}};
    for (auto& e : g.entries)
      names.push_back({std::string(e.hyperbolic ? "h" : "e") + "_{" +
                           to_string(e.slope) + "}",
                       e.mult});
    std::sort(names.begin(), names.end());
    std::string s;
    for (auto& [nm, m] : names) {
      if (!s.empty()) s += "·";
      s += nm;
      if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
  };

  PfcData base = build_pfc(iv, p, j_T);
  std::map<std::string, int> base_index;
  for (int i = 0; i < static_cast<int>(base.gens.size()); ++i)
    base_index[to_string(base.gens[i])] = i;

  ChainComplex c;
  for (auto& g : base.gens) {
    Generator gen;
    gen.id = to_string(g);
    gen.z2 = hyperbolic_count(g) % 2;
    c.add_generator(std::move(gen));
  }
  bool has_top = (p - 1 >= 0) && (j_T - n >= 0);
  PfcData top;
  if (has_top) {
    top = build_pfc(iv, p - 1, j_T - n);
    for (auto& g : top.gens) {
      Generator gen;
      gen.id = decorate(g);
      gen.z2 = (1 + hyperbolic_count(g)) % 2;
      c.add_generator(std::move(gen));
    }
  }
  for (auto& [from, to] : base.entries)
    c.add_entry(to_string(base.gens[from]), to_string(base.gens[to]));
  if (has_top) {
    for (auto& [from, to] : top.entries)
      c.add_entry(decorate(top.gens[from]), decorate(top.gens[to]));
    // The augmentation d(h+ Gamma) += e_{1/n} Gamma.
    for (auto& g : top.gens) {
      std::vector<PathEntry> prod = g.entries;
      prod.push_back({make_slope(1, n), false, 1});
      std::string target = to_string(canonicalize(std::move(prod)));
      if (!base_index.count(target))
        throw std::logic_error("augmentation target missing: " + target);
      c.add_entry(decorate(g), target);
    }
  }
  check_d_squared(c, "augmented_complex");
  return c;
}

ChainComplex twist_region_complex(int n, int k) {
  if (n < 2) throw std::invalid_argument("twist_region_complex needs n >= 2");
  if (k != n && k != n + 1)
    throw std::invalid_argument("twist_region_complex defined for k = n, n+1");
  return augmented_complex(n, k, 1);
}

}  // namespace eck
