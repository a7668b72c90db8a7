#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flagkit/balanced.hpp"
#include "flagkit/hvector.hpp"
#include "flagkit/io.hpp"

namespace flagkit::harness {

struct SuiteConfig {
  int max_n = 12;              ///< largest cycle length in cycle families, 4..16
  std::uint64_t seed = 0;      ///< seeds every random vertex order
  int orders = 5;              ///< random orders per triangulation check, 1..20
  int witness_vertices = 6;    ///< vertex budget for witness searches, 1..8
  bool concurrent = true;      ///< evaluate cases on worker threads

  /// Raises ConfigOutOfBounds.
  void validate() const;
};

struct Verdict {
  std::string identity;
  bool holds = false;
};

struct CaseResult {
  std::string input;
  std::vector<Verdict> verdicts;
  io::Json detail = io::Json::object();
  bool ok() const;
};

enum class SuiteKind { hard, comparison };

struct SuiteReport {
  std::string suite;
  std::string statement;            ///< the identity under test, in words
  SuiteKind kind = SuiteKind::hard;
  std::vector<std::string> notes;   ///< readings and deliberate choices
  std::vector<CaseResult> cases;

  bool ok() const;
  io::Json to_json() const;
};

const std::vector<std::string>& suite_names();
/// Raises UnknownSuite and ConfigOutOfBounds.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// Parses names like "C5", "C5*C7", "X3" (cross-polytope boundary),
/// "K3" (full simplex), "B4" (simplex boundary), "P2" (path), "I2"
/// (points), "S(C4)" (suspension) and "{}" (the empty face).
SimplicialComplex parse_complex_name(const std::string& name);

/// g_Δ(2w) = sum_i f_{i-1}(T) (2w+2)^{d/2-i}, and the coefficient form
/// [w^k] g_Δ(2w) = sum_{j>=k} f_{d/2-j-1}(T) 2^j C(j,k). Raises GammaMismatch
/// when f(T) is not γ(Δ).
bool gamma_to_g_expansion_check(const SimplicialComplex& delta, const SimplicialComplex& T);

/// How to turn h(Δ) into a target f-vector for Γ.
enum class Reading { full, truncated, doubled };
std::string to_string(Reading r);
Reading parse_reading(const std::string& text);

struct TargetVector {
  std::vector<Count> f;       ///< with f_{-1} = 1
  std::string conflict;       ///< nonempty when the reading forces f_{-1} != 1
};
TargetVector target_for(const SymmetricHVector& h, Reading r);

struct Witness {
  ColoredComplex gamma;
  std::string route;
};
/// Looks for a balanced complex with f-vector `target` (colors = dim + 1):
/// the Boolean construction over the compressed γ-complex when `boolean_d`
/// is given, then the compressed complex, then a budgeted search over
/// colorful face sets on at most `max_vertices` vertices.
std::optional<Witness> search_gamma_witness(const std::vector<Count>& target, std::optional<int> boolean_d,
                                            int max_vertices);

/// (P_Δ(2α+1) + f_{d/2-1}(Γ))/2 - sum_{i=0}^{d/2} f_{d/2-i-1}(Γ) + 1.
RatPoly danzinput_lhs(const SymmetricHVector& h, const FVector& gamma_f);
/// (g_Δ(2w) + f_{d/2-1}(Γ))/2 - sum_{i=0}^{d/2} f_{d/2-i-1}(Γ) + 1.
RatPoly invtcheb_rhs(const SymmetricHVector& h, const FVector& gamma_f);

/// The three-way comparison for one (Δ, Γ) pair, as a report case.
CaseResult simpgamdanz_compare(const std::string& label, const SimplicialComplex& delta, const ColoredComplex& gamma);

}  // namespace flagkit::harness
