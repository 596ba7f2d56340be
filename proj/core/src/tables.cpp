#include "thetacorr/tables.hpp"

#include <json.hpp>

#include "thetacorr/format.hpp"
#include "thetacorr/session.hpp"
#include "thetacorr/theta.hpp"

namespace thetacorr {

namespace {

// Free unitary characters a, b, c, chi*, mu, w, w0 of infinite order; eta
// quadratic. tau0 is fixed by eta, tau3 has trivial central character and
// tau4 central character chi^2; the remaining tokens share central w.
const char* const kPrelude = R"(char chi
char chi1
char chi2
char mu
char w
char w0
char a
char b
char c
char eta order 2
sc tau { omega = w }
sc tau1 { omega = w }
sc tau2 { omega = w }
sc tau0 { omega = w0, selftwists = {eta} }
sc tau3 { omega = 1 }
sc tau4 { omega = chi^2 }
)";

struct RowSpec {
  int table;
  const char* tag;
  const char* input;
};

const RowSpec kRows[] = {
    {1, "SC(a)", "SC(pi0, w)"},
    {1, "SC(b)", "theta22(sc(tau1), sc(tau2))"},
    {1, "SC(c)", "theta40(D(tau1), D(tau2))"},
    {1, "DS(a)", "St(eta, sc(tau0))"},
    {1, "DS(b)", "St(sc(tau3), mu)"},
    {1, "DS(c)", "St_PGSp4(chi)"},
    {1, "NDS(a)", "JQ(chi*nu^(1/3), sc(tau))"},
    {1, "NDS(b)", "pi_gen(sc(tau))"},
    {1, "NDS(c)", "pi_ng(sc(tau))"},
    {1, "NDS(d)", "JP(sc(tau, nu^(1/3)), chi)"},
    {1, "NDS(e)", "JB(chi1*nu^(2/3), chi2*nu^(1/3), chi)"},
    {2, "a", "(sc(tau), sc(tau))"},
    {2, "b", "(sc(tau1), sc(tau2))"},
    {2, "c", "(sc(tau4), st(chi))"},
    {2, "d", "(st(chi), st(chi*eta))"},
    {2, "e", "(sc(tau), ps(chi*nu^(1/3), w/chi*nu^(-1/3)))"},
    {2, "f", "(ps(a*nu^(1/2), b), ps(c*nu^(1/3), a*b/c*nu^(1/6)))"},
    {3, "a", "(D(tau), D(tau))"},
    {3, "b", "(D(tau1), D(tau2))"},
};

template <class T>
std::string or_zero(const std::optional<T>& v) {
  return v ? format(*v) : std::string("0");
}

}  // namespace

const std::string& tables_prelude() {
  static const std::string s = kPrelude;
  return s;
}

std::vector<TableRow> emit_tables() {
  Session session;
  session.run(tables_prelude());
  std::vector<TableRow> out;
  for (const RowSpec& spec : kRows) {
    TableRow row{spec.table, spec.tag, spec.input, {}, {}};
    Value v = session.evaluate(spec.input);
    if (spec.table == 1) {
      const auto& pi = std::get<GSp4Rep>(v);
      ThetaResult up = theta_gsp4_to_33(pi);
      row.columns = {or_zero(up.value), or_zero(theta_22_preimage(pi)), or_zero(theta_40_preimage(pi))};
      row.provenance = up.provenance;
    } else if (spec.table == 2) {
      GSp4Lift l = theta_22_lift(std::get<GSO22Rep>(v));
      row.columns = {format(l.value)};
      row.provenance = l.provenance;
    } else {
      GSp4Lift l = theta_40_lift(std::get<GSO40Rep>(v));
      row.columns = {format(l.value)};
      row.provenance = l.provenance;
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string format(const TableRow& row) {
  std::string s = "Table " + std::to_string(row.table) + " " + row.tag + ": " + row.input + " ->";
  for (size_t i = 0; i < row.columns.size(); ++i) s += (i ? " | " : " ") + row.columns[i];
  return s;
}

std::string tables_to_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto& c : r.columns) cols.push_back(c);
    arr.push_back({{"table", r.table}, {"row", r.tag}, {"input", r.input}, {"columns", cols}, {"provenance", r.provenance}});
  }
  return arr.dump(2);
}

}  // namespace thetacorr
