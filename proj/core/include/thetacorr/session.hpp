#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "thetacorr/charlattice.hpp"
#include "thetacorr/repdata.hpp"

namespace thetacorr {

using Value = std::variant<Character, GL2Rep, DRep, GSO22Rep, GSO40Rep, GSp4Rep>;

std::string format(const Value& v);

// One executed query. output_json is a serialized JSON value.
struct CommandResult {
  int line = 0;
  std::string input;
  std::string operation;
  std::string output;
  std::string output_json;
  std::string provenance;
  std::vector<std::pair<std::string, bool>> invariant_checks;

  bool checks_pass() const;
  // {input, operation, output, provenance, invariant_checks}
  std::string to_json() const;
};

// Declarations and named values of the declaration language. Statements:
//   char NAME [order N] [unramified]
//   sc NAME { omega = CHAR, selftwists = {CHAR, ...} }
//   rep NAME = EXPR
//   lift gso22|gso40|gsp4 EXPR, preimage EXPR, dichotomy EXPR, lparam EXPR,
//   adjoint EXPR, generic_check EXPR, classify Klingen(..)|Siegel(..)|Borel(..),
//   satake(T1, T2, V), jacquet m=M n=N (t=T | k=K) [r=R] [isometry], show EXPR
// A line holding only an expression is shown.
class Session {
 public:
  Session();

  // Executes every statement; declarations yield no result.
  std::vector<CommandResult> run(std::string_view source);
  // Executes a single statement that must be a query.
  CommandResult query(std::string_view command);
  Value evaluate(std::string_view expression);

  ContextPtr context() const { return ctx_; }
  std::optional<SCToken> token(std::string_view name) const;
  std::optional<Value> lookup(std::string_view name) const;
  const std::vector<std::string>& history() const { return history_; }

 private:
  friend class StatementParser;
  std::shared_ptr<CharContext> ctx_;
  std::map<std::string, SCToken, std::less<>> tokens_;
  std::map<std::string, Value, std::less<>> reps_;
  std::vector<std::string> history_;
};

}  // namespace thetacorr
