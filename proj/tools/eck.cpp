// Command-line surface for the ECK calculator.
//
// Exit codes: 0 success, 1 validation/computation failure, 2 bad flags.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eck/chaincx.hpp"
#include "eck/dehntwist.hpp"
#include "eck/euler.hpp"
#include "eck/surgery.hpp"
#include "eck/torusknot.hpp"

namespace {

using nlohmann::ordered_json;

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

// "t2_5" -> 5.
bool parse_knot(const std::string& s, int* n) {
  if (s.rfind("t2_", 0) != 0) return false;
  try {
    std::size_t pos = 0;
    int v = std::stoi(s.substr(3), &pos);
    if (pos != s.size() - 3) return false;
    *n = v;
    return true;
  } catch (...) {
    return false;
  }
}

// Interval endpoint syntax: "p/q", "p", with optional "+e"/"-e" suffix for the
// infinitesimal; bare "e"/"+e"/"-e" means 0 +- e.
bool parse_end(std::string s, eck::IntervalEnd* end) {
  int eps = 0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "+e") {
    eps = 1;
    s = s.substr(0, s.size() - 2);
  } else if (s.size() >= 2 && s.substr(s.size() - 2) == "-e") {
    eps = -1;
    s = s.substr(0, s.size() - 2);
  } else if (s == "e") {
    eps = 1;
    s = "";
  }
  long long p = 0, q = 1;
  if (!s.empty()) {
    try {
      std::size_t pos = 0;
      auto slash = s.find('/');
      p = std::stoll(s.substr(0, slash), &pos);
      if (pos != (slash == std::string::npos ? s.size() : slash)) return false;
      if (slash != std::string::npos) {
        q = std::stoll(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1 || q <= 0) return false;
      }
    } catch (...) {
      return false;
    }
  }
  end->slope = eck::make_slope(p, q);
  end->eps = eps;
  return true;
}

std::string read_input(const std::string& file) {
  if (file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json laurent_json(const eck::LaurentPolynomial& p) {
  ordered_json j = ordered_json::object();
  for (auto& [d, c] : p.coeff) j[std::to_string(d)] = c;
  return j;
}

ordered_json series_json(const eck::TruncatedSeries& s) {
  ordered_json j;
  j["cutoff"] = s.cutoff;
  j["coefficients"] = ordered_json::object();
  for (auto& [d, c] : s.coeff) j["coefficients"][std::to_string(d)] = c;
  return j;
}

// Dot-and-arrow diagram: rows = Alexander grading ascending upward, columns =
// e+ power; "<-" for horizontal arrows, "v" for vertical ones.
std::string ascii_diagram(const eck::ChainComplex& c) {
  if (c.generators.empty()) return "(empty complex)\n";
  int amin = c.generators[0].alexander, amax = amin;
  int imax = 0;
  for (auto& g : c.generators) {
    amin = std::min(amin, g.alexander);
    amax = std::max(amax, g.alexander);
    imax = std::max(imax, g.eplus);
  }
  std::map<std::pair<int, int>, std::string> cell;
  for (auto& g : c.generators) {
    auto& s = cell[{g.alexander, g.eplus}];
    if (!s.empty()) s += ",";
    s += g.id;
  }
  std::vector<std::size_t> width(imax + 1, 1);
  for (auto& [k, s] : cell)
    width[k.second] = std::max(width[k.second], s.size());

  auto has_entry = [&](int a1, int i1, int a2, int i2) {
    for (auto& g : c.generators) {
      if (g.alexander != a1 || g.eplus != i1) continue;
      for (auto& to : c.d(g.id)) {
        const eck::Generator& t = c.generator(to);
        if (t.alexander == a2 && t.eplus == i2) return true;
      }
    }
    return false;
  };

  std::ostringstream out;
  for (int a = amax; a >= amin; --a) {
    std::ostringstream row;
    row << "A=" << a << (a < 10 ? " " : "") << " ";
    for (int i = 0; i <= imax; ++i) {
      if (i > 0) row << (has_entry(a, i, a, i - 1) ? " <- " : "    ");
      auto it = cell.find({a, i});
      std::string s = it == cell.end() ? "" : it->second;
      row << s << std::string(width[i] - s.size(), ' ');
    }
    std::string line = row.str();
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    if (a > amin) {
      std::ostringstream mid;
      mid << "     ";
      for (int i = 0; i <= imax; ++i) {
        if (i > 0) mid << "    ";
        bool down = has_entry(a, i, a - 1, i);
        mid << (down ? "v" : " ") << std::string(width[i] - 1, ' ');
      }
      std::string line2 = mid.str();
      while (!line2.empty() && line2.back() == ' ') line2.pop_back();
      if (!line2.empty()) out << line2 << "\n";
    }
  }
  return out.str();
}

std::string rep_string(const std::set<std::string>& cycle) {
  std::string s;
  for (auto& id : cycle) {
    if (!s.empty()) s += " + ";
    s += id;
  }
  return s.empty() ? "0" : s;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorial calculator for embedded contact knot "
               "homology of T(2,n) torus knots, Dehn-twist periodic Floer "
               "homology, and large-negative surgery"};
  app.require_subcommand(1);

  // ---- torus ----
  auto* torus = app.add_subcommand("torus", "ECK of the torus knot T(2,n)");
  int torus_n = 0;
  bool torus_full = false;
  int torus_imax = -1;
  std::string torus_format = "table";
  torus->add_option("--n", torus_n, "odd n >= 3")->required();
  torus->add_flag("--full", torus_full, "render the full bi-filtered complex");
  torus->add_option("--imax", torus_imax, "e+ truncation (default n)");
  torus->add_option("--format", torus_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  // ---- surgery ----
  auto* surgery = app.add_subcommand("surgery", "ECK of -n surgery on T(2,m)");
  std::string surgery_knot;
  int surgery_framing = 0;
  int surgery_class = -1;
  std::string surgery_format = "table";
  surgery->add_option("--knot", surgery_knot, "torus knot, e.g. t2_5")
      ->required();
  surgery->add_option("--framing", surgery_framing,
                      "negative framing -n with n > 2g")
      ->required();
  surgery->add_option("--class", surgery_class, "single residue class [j]");
  surgery->add_option("--format", surgery_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  // ---- pfh ----
  auto* pfh = app.add_subcommand(
      "pfh", "Dehn-twist periodic Floer homology generators");
  std::vector<std::string> pfh_interval;
  long long pfh_p = 0, pfh_q = 0;
  bool pfh_homology = false;
  std::string pfh_format = "table";
  pfh->add_option("--interval", pfh_interval, "slope interval, e.g. -e 1/5+e")
      ->expected(2)
      ->required();
  pfh->add_option("--p", pfh_p, "homology class P")->required();
  pfh->add_option("--q", pfh_q, "homology class Q")->required();
  pfh->add_flag("--homology", pfh_homology, "compute homology and classes");
  pfh->add_option("--format", pfh_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  // ---- chi ----
  auto* chi = app.add_subcommand("chi", "graded Euler characteristic");
  std::string chi_file, chi_grading = "alexander", chi_format = "terms";
  chi->add_option("--complex", chi_file, "chain complex JSON file")->required();
  chi->add_option("--grading", chi_grading, "grading name");
  chi->add_option("--format", chi_format, "terms|json")
      ->check(CLI::IsMember({"terms", "json"}));

  // ---- torsion ----
  auto* torsion = app.add_subcommand("torsion", "Turaev torsion by Fox calculus");
  std::vector<int> torsion_pq;
  int torsion_cutoff = 0;
  std::string torsion_format = "terms";
  torsion->add_option("--torus", torsion_pq, "torus knot parameters p q")
      ->expected(2)
      ->required();
  torsion->add_option("--cutoff", torsion_cutoff, "series cutoff degree")
      ->required();
  torsion->add_option("--format", torsion_format, "terms|json")
      ->check(CLI::IsMember({"terms", "json"}));

  // ---- categorify ----
  auto* categorify =
      app.add_subcommand("categorify", "chi vs torsion categorification check");
  std::string cat_knot;
  int cat_framing = 0;
  int cat_cutoff = -1;
  categorify->add_option("--knot", cat_knot, "torus knot, e.g. t2_5")
      ->required();
  categorify->add_option("--framing", cat_framing,
                         "optional negative framing for the surgered check");
  categorify->add_option("--cutoff", cat_cutoff, "series cutoff");

  // ---- complex ----
  auto* complex_cmd = app.add_subcommand("complex", "chain complex utilities");
  auto* show = complex_cmd->add_subcommand("show", "render a complex");
  std::string show_file = "-", show_format = "ascii";
  bool show_from_json = false;
  show->add_option("--file", show_file, "JSON file ('-' for stdin)");
  show->add_option("--format", show_format, "ascii|json")
      ->check(CLI::IsMember({"ascii", "json"}));
  show->add_flag("--from-json", show_from_json, "read JSON from stdin");

  // ---- ss ----
  auto* ss = app.add_subcommand("ss", "spectral sequence pages");
  std::string ss_file, ss_filtration, ss_direction = "desc";
  int ss_pages = 0;
  ss->add_option("--file", ss_file, "chain complex JSON file")->required();
  ss->add_option("--filtration", ss_filtration, "grading name")->required();
  ss->add_option("--pages", ss_pages, "last page index r")->required();
  ss->add_option("--direction", ss_direction, "asc|desc")
      ->check(CLI::IsMember({"asc", "desc"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags are exit 2; --help is success
  }

  if (*torus) {
    if (torus_n < 3 || torus_n % 2 == 0)
      return fail("--n must be odd and >= 3");
    int imax = torus_imax < 0 ? torus_n : torus_imax;
    if (torus_full) {
      eck::ChainComplex c = eck::full_complex(torus_n, imax);
      if (torus_format == "json")
        std::cout << eck::to_json(c) << "\n";
      else
        std::cout << ascii_diagram(c);
      return 0;
    }
    auto table = eck::eck_hat(torus_n);
    if (torus_format == "json") {
      ordered_json j;
      for (auto& [a, rg] : table) {
        ordered_json e;
        e["grading"] = a;
        e["rank"] = rg.first;
        e["generator"] = rg.second;
        j.push_back(std::move(e));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto& [a, rg] : table)
        std::cout << "grading " << a << ": rank " << rg.first
                  << ", generator " << rg.second << "\n";
    }
    return 0;
  }

  if (*surgery) {
    int m = 0;
    if (!parse_knot(surgery_knot, &m) || m < 3 || m % 2 == 0) {
      std::cerr << "error: --knot must look like t2_5 with odd n >= 3\n";
      return 2;
    }
    int g = (m - 1) / 2;
    if (surgery_framing >= 0 || -surgery_framing <= 2 * g) {
      std::cerr << "error: --framing must be a negative integer -n with "
                   "n > 2g = "
                << 2 * g << "; only large negative surgeries are in scope\n";
      return 2;
    }
    eck::SurgerySpec spec{m, -surgery_framing};
    eck::SurgeryResult res = eck::surgery_eck_hat(spec);
    if (surgery_class >= 0 && surgery_class >= spec.n)
      return fail("--class must satisfy 0 <= j < n");
    if (surgery_format == "json") {
      ordered_json j;
      j["knot"] = surgery_knot;
      j["framing"] = surgery_framing;
      j["classes"] = ordered_json::array();
      for (auto& [jj, cls] : res.classes) {
        if (surgery_class >= 0 && jj != surgery_class) continue;
        ordered_json jc;
        jc["class"] = jj;
        jc["pieces"] = ordered_json::array();
        for (auto& [a, h] : cls.pieces) {
          ordered_json jp;
          jp["grading"] = a;
          jp["rank"] = h.rank;
          jp["representatives"] = ordered_json::array();
          for (auto& rep : h.representatives)
            jp["representatives"].push_back(rep_string(rep));
          jc["pieces"].push_back(std::move(jp));
        }
        j["classes"].push_back(std::move(jc));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto& [jj, cls] : res.classes) {
        if (surgery_class >= 0 && jj != surgery_class) continue;
        if (surgery_class < 0) std::cout << "class [" << jj << "]:\n";
        std::string indent = surgery_class < 0 ? "  " : "";
        for (auto& [a, h] : cls.pieces) {
          std::cout << indent << "grading " << a << ": rank " << h.rank;
          for (auto& rep : h.representatives)
            std::cout << "  [" << rep_string(rep) << "]";
          std::cout << "\n";
        }
      }
    }
    return 0;
  }

  if (*pfh) {
    eck::SlopeInterval iv;
    if (!parse_end(pfh_interval[0], &iv.lo) ||
        !parse_end(pfh_interval[1], &iv.hi)) {
      std::cerr << "error: cannot parse interval endpoints\n";
      return 2;
    }
    try {
      auto gens = eck::enumerate_generators(iv, pfh_p, pfh_q);
      if (pfh_format == "json") {
        ordered_json j;
        j["generators"] = ordered_json::array();
        for (auto& mono : gens) {
          ordered_json jg;
          jg["monomial"] = eck::to_string(mono);
          jg["path"] = ordered_json::array();
          for (auto& [x, y] : eck::path_points(mono))
            jg["path"].push_back(ordered_json::array({x, y}));
          j["generators"].push_back(std::move(jg));
        }
        if (pfh_homology) {
          eck::ChainComplex c = eck::pfc_complex(iv, pfh_p, pfh_q);
          eck::HomologyGroup h = eck::homology(c);
          j["homology_rank"] = h.rank;
          j["classes"] = ordered_json::array();
          for (auto& rep : h.representatives)
            j["classes"].push_back(rep_string(rep));
          auto cf = eck::closed_form_generators(iv, pfh_p, pfh_q);
          if (cf.nonempty) {
            j["E"] = eck::to_string(cf.E);
            j["H"] = ordered_json::array();
            for (auto& hh : cf.H) j["H"].push_back(eck::to_string(hh));
          }
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "generators: " << gens.size() << "\n";
        for (auto& mono : gens) std::cout << "  " << eck::to_string(mono) << "\n";
        if (pfh_homology) {
          eck::ChainComplex c = eck::pfc_complex(iv, pfh_p, pfh_q);
          eck::HomologyGroup h = eck::homology(c);
          std::cout << "homology rank " << h.rank << "\n";
          int k = 0;
          for (auto& rep : h.representatives)
            std::cout << "class " << ++k << ": [" << rep_string(rep) << "]\n";
          auto cf = eck::closed_form_generators(iv, pfh_p, pfh_q);
          if (cf.nonempty) {
            std::cout << "E = " << eck::to_string(cf.E) << "\n";
            for (auto& hh : cf.H)
              std::cout << "H = " << eck::to_string(hh) << "\n";
          }
        }
      }
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    return 0;
  }

  if (*chi) {
    try {
      eck::ChainComplex c = eck::complex_from_json(read_input(chi_file));
      eck::LaurentPolynomial p = eck::graded_chi(c, chi_grading);
      if (chi_format == "json")
        std::cout << laurent_json(p).dump(2) << "\n";
      else
        std::cout << eck::to_string(p) << "\n";
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    return 0;
  }

  if (*torsion) {
    try {
      auto s = eck::fox_torsion_torus(torsion_pq[0], torsion_pq[1],
                                      torsion_cutoff);
      if (torsion_format == "json")
        std::cout << series_json(s).dump(2) << "\n";
      else
        std::cout << eck::to_string(s) << "\n";
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    return 0;
  }

  if (*categorify) {
    int m = 0;
    if (!parse_knot(cat_knot, &m) || m < 3 || m % 2 == 0) {
      std::cerr << "error: --knot must look like t2_5 with odd n >= 3\n";
      return 2;
    }
    int g = (m - 1) / 2;
    try {
      if (cat_framing == 0) {
        int cutoff = cat_cutoff < 0 ? 4 * g + 4 : cat_cutoff;
        auto tau = eck::fox_torsion_torus(2, m, cutoff);
        // The hat complex with zero differential carries the table's
        // generators; chi only needs gradings and signs.
        eck::ChainComplex hat;
        for (auto& [a, rg] : eck::eck_hat(m)) {
          eck::Generator gen;
          gen.id = rg.second;
          gen.alexander = a;
          gen.z2 = a % 2;
          hat.add_generator(std::move(gen));
        }
        auto rep = eck::categorification_check(hat, tau, 1);
        std::cout << (rep.ok ? "ok: " : "mismatch: ") << rep.detail << "\n";
        return rep.ok ? 0 : 1;
      }
      if (cat_framing >= 0 || -cat_framing <= 2 * g) {
        std::cerr << "error: --framing must be negative with |framing| > 2g\n";
        return 2;
      }
      int n = -cat_framing;
      int cutoff = cat_cutoff < 0 ? n + 2 * g - 1 : cat_cutoff;
      auto tau = eck::fox_torsion_torus(2, m, cutoff);
      eck::TruncatedSeries rhs =
          (eck::LaurentPolynomial::one() -
           eck::LaurentPolynomial::term(1, n)) *
          tau;
      eck::SurgeryResult res = eck::surgery_eck_hat({m, n});
      // Signed chi of the surgered answer: each homology class contributes
      // the Lefschetz sign of its (z2-homogeneous) representative.
      eck::LaurentPolynomial chi_poly;
      for (auto& [jj, cls] : res.classes) {
        for (auto& [a, h] : cls.pieces) {
          eck::ChainComplex piece = a == jj
                                        ? eck::a_complex(m, jj)
                                        : eck::b_complex(m, 2 * g - jj);
          for (auto& rep : h.representatives) {
            int z = piece.generator(*rep.begin()).z2;
            chi_poly.set(a, chi_poly.at(a) + (z == 0 ? 1 : -1));
          }
        }
      }
      bool all_ok = true, signed_ok = true;
      std::string detail;
      for (int d = 0; d <= rhs.cutoff; ++d) {
        long long lhs = chi_poly.at(d);
        long long r = rhs.at(d);
        if (lhs != r) signed_ok = false;
        if (std::abs(lhs) != std::abs(r)) {
          all_ok = false;
          detail = "degree " + std::to_string(d) + ": |" +
                   std::to_string(lhs) + "| != |" + std::to_string(r) + "|";
          break;
        }
      }
      if (all_ok)
        std::cout << "ok: |chi| matches |(1 - t^" << n
                  << ")*torsion| at every degree 0.." << rhs.cutoff
                  << (signed_ok ? " (signed match)" : " (up to signs)")
                  << "\n";
      else
        std::cout << "mismatch: " << detail << "\n";
      return all_ok ? 0 : 1;
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }

  if (*show) {
    try {
      std::string text =
          show_from_json ? read_input("-") : read_input(show_file);
      eck::ChainComplex c = eck::complex_from_json(text);
      if (show_format == "json")
        std::cout << eck::to_json(c) << "\n";
      else
        std::cout << ascii_diagram(c);
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    return 0;
  }

  if (*ss) {
    try {
      eck::ChainComplex c = eck::complex_from_json(read_input(ss_file));
      auto dir = ss_direction == "asc"
                     ? eck::FiltrationSpec::Direction::Ascending
                     : eck::FiltrationSpec::Direction::Descending;
      eck::FiltrationSpec f =
          eck::filtration_from_grading(c, ss_filtration, dir);
      auto pages = eck::spectral_sequence(c, f, ss_pages);
      for (std::size_t r = 0; r < pages.size(); ++r) {
        std::cout << "page " << r << ":\n";
        for (auto& [key, rank] : pages[r])
          std::cout << "  level " << key.first << " z2 " << key.second
                    << ": rank " << rank << "\n";
      }
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
