#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arglab/constructions.hpp"
#include "arglab/graph.hpp"
#include "arglab/int_matrix.hpp"

namespace arglab {

struct AssociationScheme {
  int order = 0;
  std::vector<IntMatrix> relations;  // F_0 .. F_n
  bool symmetric = false;
  bool commutative = false;

  int classes() const { return static_cast<int>(relations.size()) - 1; }
};

struct SchemeWitness {
  int axiom = 0;  // 1: F0 = I, 2: sum = J, 3: transpose closure, 4: products in span
  int i = -1;
  int j = -1;
  int row = -1;
  int col = -1;
};

struct SchemeCheck {
  std::optional<AssociationScheme> scheme;
  SchemeWitness witness;

  bool ok() const { return scheme.has_value(); }
};

struct IntersectionNumbers {
  int classes = 0;
  std::vector<std::vector<std::vector<long long>>> p;  // p[i][j][k]
};

// Checks the four scheme axioms by direct matrix computation and sets the
// symmetric/commutative flags.  Matrices must be square 0/1 of equal order
// (MalformedInstance otherwise); axiom failures come back as witnesses.
SchemeCheck verify_scheme(const std::vector<IntMatrix>& relations);

IntersectionNumbers intersection_numbers(const AssociationScheme& s);

std::vector<long long> relation_valencies(const AssociationScheme& s);

// Exact identity C1*C2 = C2*C1 = n*C0 + (n-1)/2 * (C1 + C2), both orders.
bool verify_c1c2_identity(const CMatrixSet& c);

// The 5-class symmetric scheme whose relations are the signature classes
// (d(x,y), d(x',y)).  Requires q_regular_check to pass (NotApplicable);
// MalformedInstance if the relations fail the scheme axioms.
AssociationScheme scheme_from_q_regular_graph(const Graph& g);

// {"classes": n, "symmetric": bool, "valencies": [...], "p": nested array}
std::string scheme_report_json(const AssociationScheme& s);

}  // namespace arglab
