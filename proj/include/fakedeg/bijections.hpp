#pragma once

#include <string>
#include <vector>

#include "fakedeg/dominoes.hpp"
#include "fakedeg/tableaux.hpp"

namespace fakedeg {

/// (Y1, Y2): a standard tuple tableau with two fillings.
using TableauPair = StandardTupleTableau;

/// C: even-size domino shapes, paired through lusztig_rho1.
/// B: odd-size shapes (zero square), paired through lusztig_rho2.
enum class DominoType { C, B };

/// One insertion step of pi_C / pi_B.
struct InsertionStep {
  int label = 0;
  Domino domino;
  /// Case that fired, e.g. "piC-H3" or "piB-V2".
  std::string rule;
  /// Cell actually added (component 0 is Y1).
  Placement placed;
  /// Target named by the case table read literally: a component and a row
  /// (horizontal cases) or column (vertical cases) index.
  int literal_component = 0;
  int literal_index = 0;
  bool literal_agrees = false;
};

struct InsertionResult {
  TableauPair pair;
  std::vector<InsertionStep> steps;
};

/// Inserts the dominoes of T in label order. The case label follows the
/// horizontal/vertical table; the cell is placed where the 2-quotient of the
/// growing domino shape gains its box, so shapes land on rho^{-1}(shape(T)).
/// std::invalid_argument when the size parity does not match `type`;
/// InternalError if a step fails to add exactly one corner cell.
InsertionResult insert_dominoes(const DominoTableau& t, DominoType type);

TableauPair pi_C(const DominoTableau& t);
TableauPair pi_B(const DominoTableau& t);

/// Ordering key of a label's cell: content x = col - row, then
/// C: Y1 -> 2x+1, Y2 -> 2x;  B: Y1 -> 2x+2, Y2 -> 2x-1.
int content_key(const Placement& p, DominoType type);

/// Sum of i with content_key(i+1) < content_key(i). Equals maj_domino(T)
/// on pi_C(T) (resp. pi_B(T)).
int pair_maj(const TableauPair& p, DominoType type);
int pair_maj_C(const TableauPair& p);
int pair_maj_B(const TableauPair& p);

struct FlipResult {
  TableauPair pair;
  /// i for every exchange of labels i and i+1, in order.
  std::vector<int> swaps;
};

/// Exchanges adjacent labels i, i+1 lying in different fillings until the
/// tuple major index of the pair equals pair_maj(p, type). Y1 letters are
/// taken by decreasing key; each moves past the Y2 letters of larger key in
/// increasing key order, exchanging labels whenever the two letters hold
/// consecutive labels. Component shapes are unchanged.
FlipResult flip(const TableauPair& p, DominoType type);
TableauPair flip_C(const TableauPair& p);
TableauPair flip_B(const TableauPair& p);

/// Diagnostic: the index sweep (i = 1..n-1, exchanging i, i+1 across the
/// fillings when pair-maj says i contributes but i+1 sits in Y1 after i in
/// Y2, or the reverse). Type C repeats with a never-re-flip journal until
/// stable; type B sweeps once. Not maj-preserving in general.
FlipResult flip_sweeps_literal(const TableauPair& p, DominoType type);

TableauPair pi_C_prime(const DominoTableau& t);
TableauPair pi_B_prime(const DominoTableau& t);

}  // namespace fakedeg
