#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arglab/designs.hpp"
#include "arglab/graph.hpp"

namespace arglab {

struct ArParams {
  long long v = 0;
  long long k = 0;
  long long lambda = 0;
  long long mu = 0;

  bool operator==(const ArParams&) const = default;
  std::string to_string() const;  // "(v,k,lambda,mu)"
};

enum class CheckFailure {
  None,
  NotConnected,
  DiameterTooSmall,
  DiameterNotTwo,
  NotRegular,
  LambdaNotConstant,
  MuNotConstant,
  NotDistanceRegular,
  NotApplicable,
  NoAntipode,
  MalformedSignature,
  NotEquitable,
  QuotientMismatch,
};

const char* to_string(CheckFailure f);

// First offending pair found, with the constant seen earlier and the value
// that broke it.
struct PairWitness {
  int x = -1;
  int y = -1;
  long long expected = -1;
  long long actual = -1;
};

struct ArCheck {
  std::optional<ArParams> params;
  CheckFailure failure = CheckFailure::None;
  PairWitness witness;

  bool ok() const { return params.has_value(); }
};

struct SesquiParams {
  long long v = 0;
  long long k = 0;
  long long mu = 0;

  bool operator==(const SesquiParams&) const = default;
};

struct SesquiCheck {
  std::optional<SesquiParams> params;
  CheckFailure failure = CheckFailure::None;
  PairWitness witness;

  bool ok() const { return params.has_value(); }
};

struct IntersectionArray {
  std::vector<long long> b;  // b_0 .. b_{d-1}
  std::vector<long long> c;  // c_1 .. c_d

  int diameter() const { return static_cast<int>(c.size()); }
  long long k() const { return b.empty() ? 0 : b[0]; }
  long long a(int i) const;           // k - b_i - c_i with the b_d = c_0 = 0 convention
  std::string to_string() const;      // "{b0,...;c1,...}"
  bool operator==(const IntersectionArray&) const = default;
};

struct DrCheck {
  std::optional<IntersectionArray> array;
  CheckFailure failure = CheckFailure::None;
  PairWitness witness;
  int witness_distance = -1;
  char witness_side = ' ';  // 'b' or 'c'

  bool ok() const { return array.has_value(); }
};

struct FeasibilityFinding {
  std::string bound;       // short identifier
  std::string inequality;  // rendered with the actual numbers
  bool violated = false;
};

struct FeasibilityReport {
  std::vector<FeasibilityFinding> findings;
  bool all_pass() const;
};

struct QRegularCheck {
  std::optional<QuotientMatrix> quotient;
  CheckFailure failure = CheckFailure::None;
  std::string reason;       // precondition text / deviation description
  int witness_vertex = -1;  // base vertex where the deviation appeared
  int witness_cell = -1;
  long long gamma4_count = -1;  // antipode failure payload

  bool ok() const { return quotient.has_value(); }
};

enum class GraphCase { FiveCube, K2BoxLambda, GddIncidence, Contradiction };

const char* to_string(GraphCase c);

struct Classification {
  GraphCase kind = GraphCase::Contradiction;
  ArParams params;
  int diameter = 0;
  std::optional<ArParams> folded_params;  // FiveCube evidence
  std::optional<GddExtraction> design;    // GddIncidence evidence
  std::string note;                       // K2BoxLambda / Contradiction detail
};

// (v,k,lambda,mu) extraction for connected graphs of diameter >= 2; witness
// on the first non-constant count.
ArCheck amply_regular_params(const Graph& g);

// Diameter-2 case where mu ranges over all non-adjacent pairs.
ArCheck strongly_regular_params(const Graph& g);

// Intersection array extraction over all vertex pairs.
DrCheck distance_regular_array(const Graph& g);

SesquiCheck is_sesqui_regular(const Graph& g);

// True iff every pair of distinct vertices has 0 or 2 common neighbors.
bool is_02_graph(const Graph& g);

// The closed-form six-cell quotient for odd valency k >= 5: cell sizes
// (1, k, 2k, k, 2, 1).  InvalidValency otherwise.  Pinned against the
// brute-force equitable quotient of freshly built instances.
QuotientMatrix expected_quotient(long long k);

// Every base vertex must yield an equitable signature partition whose
// quotient equals expected_quotient(k).
QRegularCheck q_regular_check(const Graph& g);

// Parameter-level sanity bounds for amply regular graphs at the given
// diameter; reports each applicable bound with its instantiated inequality.
FeasibilityReport feasibility_diagnostics(const ArParams& p, int diameter);

// Trichotomy classifier.  Preconditions (connected, amply regular, k >= 5
// odd, mu = (k-1)/2, diameter >= 4) raise NotApplicable.
Classification classify(const Graph& g);

}  // namespace arglab
