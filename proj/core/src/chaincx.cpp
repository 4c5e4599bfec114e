#include "eck/chaincx.hpp"

#include <algorithm>

#include <json.hpp>

namespace eck {

bool ChainComplex::has_generator(const std::string& id) const {
  return index_of(id) >= 0;
}

int ChainComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].id == id) return static_cast<int>(i);
  return -1;
}

const Generator& ChainComplex::generator(const std::string& id) const {
  int i = index_of(id);
  if (i < 0) throw std::out_of_range("no generator with id " + id);
  return generators[i];
}

std::set<std::string> ChainComplex::d(const std::string& id) const {
  auto it = differential.find(id);
  return it == differential.end() ? std::set<std::string>{} : it->second;
}

void ChainComplex::add_generator(Generator g) {
  if (has_generator(g.id))
    throw std::invalid_argument("duplicate generator id " + g.id);
  generators.push_back(std::move(g));
}

void ChainComplex::add_entry(const std::string& from, const std::string& to) {
  auto& s = differential[from];
  auto it = s.find(to);
  if (it != s.end())
    s.erase(it);
  else
    s.insert(to);
  if (s.empty()) differential.erase(from);
}

BitMatrix ChainComplex::matrix() const {
  int n = static_cast<int>(generators.size());
  BitMatrix m(n, n);
  for (auto& [from, tos] : differential) {
    int j = index_of(from);
    for (auto& to : tos) m.entries.insert({index_of(to), j});
  }
  return m;
}

int grading_value(const Generator& g, const std::string& grading) {
  if (grading == "alexander") return g.alexander;
  if (grading == "eplus") return g.eplus;
  if (grading == "z2") return g.z2;
  auto it = g.extra.find(grading);
  if (it == g.extra.end())
    throw std::out_of_range("generator " + g.id + " has no grading " + grading);
  return it->second;
}

ValidationReport validate(const ChainComplex& c) {
  ValidationReport rep;
  for (auto& [from, tos] : c.differential) {
    if (!c.has_generator(from)) {
      rep.violations.push_back("differential source " + from +
                               " is not a generator");
      continue;
    }
    const Generator& s = c.generator(from);
    for (auto& to : tos) {
      if (!c.has_generator(to)) {
        rep.violations.push_back("differential target " + to +
                                 " is not a generator");
        continue;
      }
      const Generator& t = c.generator(to);
      if (s.z2 == t.z2)
        rep.violations.push_back("parity: " + from + " -> " + to +
                                 " connects equal z2 gradings");
      if (t.alexander > s.alexander)
        rep.violations.push_back("alexander increases along " + from + " -> " +
                                 to);
      if (t.eplus > s.eplus)
        rep.violations.push_back("eplus increases along " + from + " -> " + to);
    }
  }
  // d^2 = 0: collect d(d(x)) with mod-2 cancellation.
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
    for (auto& to : dd)
      rep.violations.push_back("d^2 != 0 at (" + g.id + " -> " + to + ")");
  }
  return rep;
}

namespace {

std::set<std::string> ids_from_vec(const ChainComplex& c, const BitVec& v) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    if (bv_get(v, static_cast<int>(i))) out.insert(c.generators[i].id);
  return out;
}

}  // namespace

HomologyGroup homology(const ChainComplex& c) {
  HomologyGroup h;
  int n = static_cast<int>(c.generators.size());
  if (n == 0) return h;
  BitMatrix m = c.matrix();
  F2Span boundaries;
  for (int j = 0; j < n; ++j) {
    BitVec e = bv_make(n);
    bv_set(e, j);
    boundaries.add(m.apply(e));
  }
  for (auto& v : kernel_basis(m)) {
    if (boundaries.add(v)) {
      h.representatives.push_back(ids_from_vec(c, v));
      ++h.rank;
    }
  }
  return h;
}

std::map<int, HomologyGroup> homology_by(const ChainComplex& c,
                                         const std::string& grading) {
  for (auto& [from, tos] : c.differential) {
    int sv = grading_value(c.generator(from), grading);
    for (auto& to : tos)
      if (grading_value(c.generator(to), grading) != sv)
        throw GradingNotPreserved("differential " + from + " -> " + to +
                                  " changes grading " + grading);
  }
  std::set<int> values;
  for (auto& g : c.generators) values.insert(grading_value(g, grading));
  std::map<int, HomologyGroup> out;
  for (int v : values) {
    ChainComplex piece = subcomplex(c, [&](const Generator& g) {
      return grading_value(g, grading) == v;
    });
    out[v] = homology(piece);
  }
  return out;
}

ChainComplex subcomplex(const ChainComplex& c,
                        const std::function<bool(const Generator&)>& keep) {
  ChainComplex out;
  std::set<std::string> kept;
  for (auto& g : c.generators)
    if (keep(g)) {
      out.generators.push_back(g);
      kept.insert(g.id);
    }
  std::vector<std::string> offending;
  for (auto& [from, tos] : c.differential) {
    if (!kept.count(from)) continue;
    for (auto& to : tos) {
      if (!kept.count(to))
        offending.push_back(from + " -> " + to);
      else
        out.differential[from].insert(to);
    }
  }
  if (!offending.empty()) {
    std::string msg = "kept set not closed under the differential:";
    for (auto& e : offending) msg += " " + e + ";";
    throw NotClosed(msg);
  }
  return out;
}

int FiltrationSpec::at(const std::string& id) const {
  auto it = value.find(id);
  if (it == value.end())
    throw std::out_of_range("filtration " + name + " has no value for " + id);
  return it->second;
}

FiltrationSpec filtration_from_grading(const ChainComplex& c,
                                       const std::string& grading,
                                       FiltrationSpec::Direction dir) {
  FiltrationSpec f;
  f.name = grading;
  f.direction = dir;
  for (auto& g : c.generators) f.value[g.id] = grading_value(g, grading);
  return f;
}

ChainComplex associated_graded(const ChainComplex& c, const FiltrationSpec& f) {
  ChainComplex out;
  out.generators = c.generators;
  for (auto& [from, tos] : c.differential)
    for (auto& to : tos)
      if (f.at(from) == f.at(to)) out.differential[from].insert(to);
  return out;
}

std::set<std::string> ChainMap::apply(const std::string& id) const {
  auto it = action.find(id);
  return it == action.end() ? std::set<std::string>{} : it->second;
}

bool is_chain_map(const ChainMap& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (auto& [from, tos] : f.action) {
    if (!f.source.has_generator(from))
      return fail("action source " + from + " not in source complex");
    for (auto& to : tos)
      if (!f.target.has_generator(to))
        return fail("action target " + to + " not in target complex");
  }
  for (auto& g : f.source.generators) {
    // f(d(x)) and d(f(x)), both with mod-2 cancellation.
    std::set<std::string> fd, df;
    auto toggle = [](std::set<std::string>& s, const std::string& id) {
      auto it = s.find(id);
      if (it != s.end())
        s.erase(it);
      else
        s.insert(id);
    };
    for (auto& mid : f.source.d(g.id))
      for (auto& to : f.apply(mid)) toggle(fd, to);
    for (auto& mid : f.apply(g.id))
      for (auto& to : f.target.d(mid)) toggle(df, to);
    if (fd != df)
      return fail("f d != d f at generator " + g.id);
  }
  return true;
}

ChainComplex mapping_cone(const ChainMap& f) {
  std::string why;
  if (!is_chain_map(f, &why)) throw NotChainMap(why);
  ChainComplex out;
  for (auto& g : f.source.generators) {
    Generator s = g;
    s.id = "S:" + g.id;
    s.z2 = 1 - g.z2;
    out.generators.push_back(std::move(s));
  }
  for (auto& g : f.target.generators) {
    Generator t = g;
    t.id = "T:" + g.id;
    out.generators.push_back(std::move(t));
  }
  for (auto& [from, tos] : f.source.differential)
    for (auto& to : tos) out.differential["S:" + from].insert("S:" + to);
  for (auto& [from, tos] : f.target.differential)
    for (auto& to : tos) out.differential["T:" + from].insert("T:" + to);
  for (auto& [from, tos] : f.action)
    for (auto& to : tos) out.differential["S:" + from].insert("T:" + to);
  return out;
}

ChainComplex gaussian_cancel(const ChainComplex& c, const std::string& a,
                             const std::string& b) {
  if (!c.has_generator(a) || !c.has_generator(b))
    throw NotCancellable("generator " + a + " or " + b + " not in complex");
  std::set<std::string> da = c.d(a);
  if (!da.count(b))
    throw NotCancellable("<d(" + a + "), " + b + "> = 0");
  ChainComplex out;
  for (auto& g : c.generators)
    if (g.id != a && g.id != b) out.generators.push_back(g);
  // d(a) + b, the correction term.
  std::set<std::string> corr = da;
  corr.erase(b);
  for (auto& g : out.generators) {
    std::set<std::string> dx = c.d(g.id);
    if (dx.count(b)) {
      for (auto& t : corr) {
        auto it = dx.find(t);
        if (it != dx.end())
          dx.erase(it);
        else
          dx.insert(t);
      }
      dx.erase(b);
    }
    dx.erase(a);
    dx.erase(b);
    if (!dx.empty()) out.differential[g.id] = std::move(dx);
  }
  return out;
}

std::vector<SpectralPage> spectral_sequence(const ChainComplex& c,
                                            const FiltrationSpec& f,
                                            int r_max) {
  if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
  // Normalize so that the differential never increases "drop": for a
  // descending filtration d lowers the level, for an ascending one it raises
  // it; either way drop(x -> y) >= 0 below.
  int sign = f.direction == FiltrationSpec::Direction::Descending ? 1 : -1;
  ChainComplex cur = c;
  auto drop = [&](const std::string& x, const std::string& y) {
    return sign * (f.at(x) - f.at(y));
  };
  for (auto& [from, tos] : cur.differential)
    for (auto& to : tos)
      if (drop(from, to) < 0)
        throw std::invalid_argument("differential " + from + " -> " + to +
                                    " moves against the filtration direction");
  auto record = [&]() {
    SpectralPage page;
    for (auto& g : cur.generators) ++page[{f.at(g.id), g.z2}];
    return page;
  };
  std::vector<SpectralPage> pages;
  pages.push_back(record());
  for (int r = 1; r <= r_max; ++r) {
    // Cancel every pair of drop < r, minimal drop first. Induced entries have
    // drop >= the cancelled pair's drop, so stages do not interfere.
    for (;;) {
      bool found = false;
      int best = 0;
      std::string ba, bb;
      for (auto& g : cur.generators) {
        auto it = cur.differential.find(g.id);
        if (it == cur.differential.end()) continue;
        for (auto& to : it->second) {
          int dr = drop(g.id, to);
          if (dr >= r) continue;
          if (!found || dr < best) {
            found = true;
            best = dr;
            ba = g.id;
            bb = to;
          }
        }
        if (found && best == 0) break;
      }
      if (!found) break;
      cur = gaussian_cancel(cur, ba, bb);
    }
    pages.push_back(record());
  }
  return pages;
}

std::string to_json(const ChainComplex& c) {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (auto& g : c.generators) {
    nlohmann::ordered_json jg;
    jg["id"] = g.id;
    jg["alexander"] = g.alexander;
    jg["eplus"] = g.eplus;
    jg["z2"] = g.z2;
    jg["extra"] = nlohmann::ordered_json::object();
    for (auto& [k, v] : g.extra) jg["extra"][k] = v;
    j["generators"].push_back(std::move(jg));
  }
  j["differential"] = nlohmann::ordered_json::object();
  for (auto& g : c.generators) {
    auto it = c.differential.find(g.id);
    if (it == c.differential.end()) continue;
    auto arr = nlohmann::ordered_json::array();
    for (auto& to : it->second) arr.push_back(to);
    j["differential"][g.id] = std::move(arr);
  }
  return j.dump(2);
}

ChainComplex complex_from_json(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  ChainComplex c;
  for (auto& jg : j.at("generators")) {
    Generator g;
    g.id = jg.at("id").get<std::string>();
    g.alexander = jg.at("alexander").get<int>();
    g.eplus = jg.at("eplus").get<int>();
    g.z2 = jg.at("z2").get<int>();
    if (jg.contains("extra"))
      for (auto& [k, v] : jg.at("extra").items()) g.extra[k] = v.get<int>();
    c.add_generator(std::move(g));
  }
  if (j.contains("differential"))
    for (auto& [from, tos] : j.at("differential").items())
      for (auto& to : tos) c.differential[from].insert(to.get<std::string>());
  return c;
}

}  // namespace eck
