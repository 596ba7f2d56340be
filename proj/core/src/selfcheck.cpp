#include "thetacorr/selfcheck.hpp"

#include <functional>
#include <map>
#include <set>

#include "thetacorr/corpus.hpp"
#include "thetacorr/format.hpp"
#include "thetacorr/jacquet.hpp"
#include "thetacorr/langlands.hpp"
#include "thetacorr/tables.hpp"
#include "thetacorr/theta.hpp"

namespace thetacorr {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.detail = describe();
  }
  // Exceptions count as failures of the element being checked.
  void guarded(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(" threw: ") + e.what();
    }
    check(ok, [&] { return describe() + why; });
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++r_.failures;
      if (r_.detail.empty()) r_.detail = what;
    }
  }
  CheckReport done(const std::string& summary = "") {
    r_.pass = r_.failures == 0;
    if (r_.pass && r_.detail.empty()) r_.detail = summary;
    return r_;
  }

 private:
  CheckReport r_;
};

// Zero pattern of the Table 1 columns (GSO(3,3), GSO(2,2), GSO(4,0)).
const std::map<std::string, std::string>& table1_zero_pattern() {
  static const std::map<std::string, std::string> p{
      {"SC(a)", "100"},  {"SC(b)", "110"},  {"SC(c)", "001"},  {"DS(a)", "100"},
      {"DS(b)", "110"},  {"DS(c)", "100"},  {"NDS(a)", "100"}, {"NDS(b)", "110"},
      {"NDS(c)", "001"}, {"NDS(d)", "110"}, {"NDS(e)", "110"}};
  return p;
}

CheckReport check_tables(std::uint32_t) {
  Tally t("tables");
  auto rows = emit_tables();
  std::map<int, std::vector<std::string>> tags;
  for (const auto& r : rows) tags[r.table].push_back(r.tag);
  const std::vector<std::string> t1{"SC(a)", "SC(b)", "SC(c)", "DS(a)", "DS(b)", "DS(c)",
                                    "NDS(a)", "NDS(b)", "NDS(c)", "NDS(d)", "NDS(e)"};
  const std::vector<std::string> t2{"a", "b", "c", "d", "e", "f"};
  const std::vector<std::string> t3{"a", "b"};
  t.require(tags[1] == t1, "Table 1 row tags differ");
  t.require(tags[2] == t2, "Table 2 row tags differ");
  t.require(tags[3] == t3, "Table 3 row tags differ");
  for (const auto& r : rows) {
    std::string want = "Table" + std::to_string(r.table) + "." + r.tag;
    t.check(r.provenance == want, [&] { return format(r) + " dispatched as " + r.provenance; });
    if (r.table == 1) {
      std::string pattern;
      for (const auto& c : r.columns) pattern += c == "0" ? '0' : '1';
      t.check(pattern == table1_zero_pattern().at(r.tag), [&] { return format(r) + " has zero pattern " + pattern; });
    } else {
      t.check(r.columns.size() == 1 && r.columns[0] != "0", [&] { return format(r); });
    }
  }
  return t.done("19 rows, tags, dispatch and zero columns agree");
}

CheckReport check_param_compat(std::uint32_t seed) {
  Tally t("param-compat");
  Corpus c = make_corpus(seed);
  std::set<char> rows;
  for (const auto& e : c.gso22) {
    rows.insert(e.row);
    t.guarded([&] { return check_parameter_compat(e.value); }, [&] { return "case " + std::string(1, e.row) + ": " + format(e.value); });
  }
  t.require(c.gso22.size() >= 200, "fewer than 200 GSO(2,2) inputs");
  t.require(rows.size() == 6, "not all six GSO(2,2) cases covered");
  return t.done(std::to_string(c.gso22.size()) + " inputs over 6 cases");
}

CheckReport check_unramified(std::uint32_t seed) {
  Tally t("unramified");
  Corpus c = make_corpus(seed);
  int boundary = 0, reducible = 0;
  for (const auto& u : c.unramified) {
    boundary += u.note == "chi2=nu^-1";
    reducible += borel_reducible(u.chi1, u.chi2);
    t.guarded([&] { return check_unramified_transfer(u.chi1, u.chi2, u.chi); },
              [&] { return "(" + format(u.chi1) + ", " + format(u.chi2) + "; " + format(u.chi) + ")"; });
  }
  t.require(c.unramified.size() >= 200, "fewer than 200 unramified triples");
  t.require(boundary > 0 && reducible > 0, "boundary cases missing");
  return t.done(std::to_string(c.unramified.size()) + " triples, " + std::to_string(reducible) + " reducible");
}

CheckReport check_generic(std::uint32_t seed) {
  Tally t("generic");
  Corpus c = make_corpus(seed);
  std::set<std::string> built;
  long poles = 0, cases = 0;
  for (const auto& e : c.gsp4) {
    if (gsp4_is_supercuspidal(e.value)) continue;
    ++cases;
    built.insert(e.built);
    t.guarded(
        [&] {
          auto [generic, holomorphic] = generic_iff_holomorphic(e.value);
          poles += !holomorphic;
          return generic == holomorphic;
        },
        [&] { return format(e.value); });
  }
  for (const char* v : {"StKlingen", "SpKlingen", "StSiegel", "SpSiegel", "TwSt", "PiGen", "PiNg", "JQZ", "JPY", "JB"})
    t.require(built.count(v) > 0, std::string("variant not covered: ") + v);
  t.require(cases >= 500, "fewer than 500 non-supercuspidal cases");
  return t.done(std::to_string(cases) + " cases, " + std::to_string(poles) + " with a pole");
}

CheckReport check_dichotomy(std::uint32_t seed) {
  Tally t("dichotomy");
  Corpus c = make_corpus(seed);
  for (const auto& e : c.gsp4) t.guarded([&] { return dichotomy_consistent(e.value); }, [&] { return format(e.value); });
  return t.done(std::to_string(c.gsp4.size()) + " representations");
}

CheckReport check_closure(std::uint32_t seed) {
  Tally t("closure");
  Corpus c = make_corpus(seed);
  long adjoints = 0;
  for (const auto& e : c.gsp4) {
    t.guarded(
        [&] {
          LParameter phi = lparam_gsp4(e.value);
          bool ok = dimension(phi) == 4 && symplectic_closure(phi) && determinant(phi) == pow(phi.sim, 2);
          // The adjoint of an opaque supercuspidal parameter is not modeled.
          if (opaque_parameter(phi)) return ok;
          LParameter ad = adjoint(phi);
          ++adjoints;
          return ok && dimension(ad) == 10 && self_dual(ad);
        },
        [&] { return format(e.value); });
  }
  return t.done(std::to_string(c.gsp4.size()) + " parameters, " + std::to_string(adjoints) + " adjoints");
}

CheckReport check_theta_laws(std::uint32_t seed) {
  Tally t("theta-laws");
  Corpus c = make_corpus(seed);
  for (const auto& e : c.gso22) {
    t.guarded(
        [&] {
          GSp4Rep pi = theta_22_to_gsp4(e.value);
          auto back = theta_22_preimage(pi);
          return gsp4_equal(pi, theta_22_to_gsp4(swapped(e.value))) && back && same_orbit(*back, e.value) &&
                 central_character_law(e.value, pi);
        },
        [&] { return format(e.value); });
  }
  for (const auto& s : c.gso40) {
    t.guarded(
        [&] {
          GSp4Rep pi = theta_40_to_gsp4(s);
          auto back = theta_40_preimage(pi);
          return gsp4_equal(pi, theta_40_to_gsp4(swapped(s))) && back && same_orbit(*back, s) &&
                 central_character_law(s, pi);
        },
        [&] { return format(s); });
  }
  for (const auto& e : c.gsp4) {
    t.guarded(
        [&] {
          ThetaResult up = theta_gsp4_to_33(e.value);
          bool zero_locus = !up.value == gsp4_is_tempered_ng(e.value);
          bool law = !up.value || central_character_law(e.value, *up.value);
          auto p22 = theta_22_preimage(e.value);
          auto p40 = theta_40_preimage(e.value);
          bool round22 = !p22 || gsp4_equal(theta_22_to_gsp4(*p22), e.value);
          bool round40 = !p40 || gsp4_equal(theta_40_to_gsp4(*p40), e.value);
          return zero_locus && law && round22 && round40;
        },
        [&] { return format(e.value); });
  }
  return t.done();
}

CheckReport check_jacquet(std::uint32_t) {
  Tally t("jacquet");
  for (int m = 2; m <= 12; m += 2) {
    for (int n = 1; n <= 6; ++n) {
      for (int tt = 0; tt <= m / 2; ++tt)
        for (int k = 0; k <= n; ++k) {
          auto where = [&] {
            return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=" + std::to_string(tt) + " k=" + std::to_string(k);
          };
          t.guarded([&] { return absorption_identity(m, n, tt, k); }, where);
        }
      for (int tt = 0; tt <= std::min(m / 2, n); ++tt) {
        auto q = filtration({m, n, -1, Side::Orthogonal, tt, false});
        t.check(q.size() == static_cast<size_t>(tt + 1) && *q.back().e0 == *q.back().f0,
                [&] { return "orth coincidence m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=k=" + std::to_string(tt); });
      }
      for (int k = 0; k <= std::min(m / 2, n); ++k) {
        auto q = filtration({m, n, -1, Side::Symplectic, k, false});
        t.check(q.size() == static_cast<size_t>(k + 1) && *q.back().e0 == *q.back().f0,
                [&] { return "sympl coincidence m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=k=" + std::to_string(k); });
      }
    }
  }
  for (auto s : {Specialization::P9_1, Specialization::P10_1, Specialization::P10_2, Specialization::P10_3})
    t.check(specialize_check(s), [&] { return "specialization " + to_string(s); });
  return t.done();
}

CheckReport check_ds(std::uint32_t seed) {
  Tally t("ds");
  Corpus c = make_corpus(seed);
  long ds = 0;
  for (const auto& e : c.gsp4) {
    if (gsp4_is_supercuspidal(e.value)) continue;
    ds += gsp4_is_discrete_series(e.value);
    t.guarded([&] { return is_discrete_series_parameter(lparam_gsp4(e.value)) == gsp4_is_discrete_series(e.value); },
              [&] { return format(e.value); });
  }
  return t.done(std::to_string(ds) + " discrete series among the cases");
}

using Oracle = CheckReport (*)(std::uint32_t);

const std::vector<std::pair<std::string, Oracle>>& registry() {
  static const std::vector<std::pair<std::string, Oracle>> r{
      {"tables", check_tables},       {"param-compat", check_param_compat}, {"unramified", check_unramified},
      {"generic", check_generic},     {"dichotomy", check_dichotomy},       {"closure", check_closure},
      {"theta-laws", check_theta_laws}, {"jacquet", check_jacquet},         {"ds", check_ds}};
  return r;
}

}  // namespace

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

CheckReport run_oracle(const std::string& name, std::uint32_t seed) {
  for (const auto& [n, f] : registry())
    if (n == name) return f(seed);
  throw UnsupportedError("unknown oracle '" + name + "'");
}

std::vector<CheckReport> run_all_oracles(std::uint32_t seed) {
  std::vector<CheckReport> out;
  for (const auto& [n, f] : registry()) out.push_back(f(seed));
  return out;
}

}  // namespace thetacorr
