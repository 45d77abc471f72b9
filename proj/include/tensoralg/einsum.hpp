#pragma once

// Index-expression language over named tensor bindings.
//
//   stmt   := [ name group* '=' ] expr
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [ real '*' ] factor+
//   factor := name (('_'|'^') group)+
//   group  := idx | '{' idx+ '}'
//   idx    := 'a'..'z' | '1'..'9'
//
// A repeated letter inside a term is summed over 1..dim; a digit pins the
// slot to that index value. Whitespace between tokens is ignored. Names are
// ASCII letters/digits (leading letter) and may contain UTF-8 characters,
// so "δ^r_s x^s" is accepted.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensoralg/core.hpp"

namespace tensoralg::einsum {

struct IndexSpec {
  char symbol = 'a';
  Variance variance = Variance::Up;

  bool is_fixed() const noexcept { return symbol >= '1' && symbol <= '9'; }
  int fixed_value() const noexcept { return symbol - '0'; }

  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

struct FactorRef {
  std::string name;
  std::vector<IndexSpec> indices;
  /// Byte offset of the name in the source text.
  std::size_t position = 0;
};

struct Term {
  double coefficient = 1.0;
  std::vector<FactorRef> factors;
};

struct Statement {
  std::optional<FactorRef> target;
  std::vector<Term> terms;
};

/// Throws ParseError.
Statement parse(std::string_view text);

/// Canonical text form; parse(format(s)) reproduces `s` up to positions.
std::string format(const Statement& statement);

struct Signature {
  int dim = 3;
  std::vector<Variance> slots;
  int weight = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

using SignatureMap = std::map<std::string, Signature, std::less<>>;
using Bindings = std::map<std::string, TensorObject, std::less<>>;

Signature signature_of(const TensorObject& t);
SignatureMap signatures_of(const Bindings& bindings);

/// Strict: dummy pairs are one Up and one Down, and variances must agree
/// everywhere. Upper indices of a factor bind to its Up slots in order,
/// lower indices to its Down slots, so x_1^r and x^r_1 mean the same. Orthogonal: upper and lower indices are identified; binding
/// variances are coerced to the written ones.
enum class IndexMode { Strict, Orthogonal };

/// One pairwise contraction between two entries of the working operand
/// list. The intermediate replaces entry `lhs` and entry `rhs` is removed.
struct PairwiseStep {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  /// Letters of the intermediate: kept letters of lhs in order, then those
  /// of rhs.
  std::vector<char> kept;
  /// Letters summed in this step, in lhs order.
  std::vector<char> summed;
  /// Multiply-adds: dim^(|kept| + |summed|).
  double cost = 0.0;
};

struct TermPlan {
  double coefficient = 1.0;
  std::vector<FactorRef> factors;
  /// Per factor: its letters after pinning digits and tracing letters
  /// repeated within the factor, in first-occurrence order.
  std::vector<std::vector<char>> operand_letters;
  /// Letters summed in this term, in first-occurrence order.
  std::vector<char> dummies;
  /// Letters left free, in first-occurrence order.
  std::vector<char> free;
  int weight = 0;
  std::vector<PairwiseStep> schedule;

  double cost() const noexcept;
  /// dim^(number of distinct letters): one loop over every letter at once.
  double naive_cost = 0.0;
};

struct ContractionPlan {
  Statement statement;
  IndexMode mode = IndexMode::Strict;
  /// Signatures the plan was validated against.
  SignatureMap signatures;
  Signature result;
  /// Free letters in result slot order.
  std::vector<char> result_letters;
  std::vector<TermPlan> terms;

  double cost() const noexcept;
  double naive_cost() const noexcept;
};

/// Semantic checks and an initial left-to-right pairwise schedule. Throws
/// ExpressionError.
ContractionPlan validate(const Statement& statement,
                         const SignatureMap& signatures,
                         IndexMode mode = IndexMode::Strict);

/// Greedy reordering: repeatedly contract the pair with the smallest
/// intermediate; ties go to the lexically first (lhs, rhs) pair.
ContractionPlan order_contractions(ContractionPlan plan);

/// Throws ExpressionError (BindingMismatch) if a binding differs from the
/// validated signature.
TensorObject execute(const ContractionPlan& plan, const Bindings& bindings,
                     Execution exec = Execution::Parallel);

/// parse + validate + order_contractions + execute.
TensorObject evaluate(std::string_view text, const Bindings& bindings,
                      IndexMode mode = IndexMode::Strict,
                      Execution exec = Execution::Parallel);

}  // namespace tensoralg::einsum
