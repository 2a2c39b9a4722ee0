#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ntc {

// S(t) = t(t-1)(t-2)/6 for t >= 0.
long long S(long long t);

// The cone over a smooth plane curve of degree d >= 3: its minimal
// resolution has a single exceptional curve C with the data below.
struct HomogModel {
  long long d;
  long long g;     // genus of C: (d-1)(d-2)/2
  long long Csq;   // C^2 = -d
  long long KC;    // K_X.C = d(d-2)
  long long pg;    // S(d)
  long long br_m;  // stabilization index of the maximal ideal: d-1
};

HomogModel model(long long d);

// chi(uC) = d u (u - d + 2) / 2; always an integer (checked).
long long chi_uC(long long d, long long u);

// Reports on the n-th power of the maximal ideal, 1 <= n <= d.
struct PowerReport {
  long long colength;  // S(n+2)
  long long q;         // S(d-n)
  bool gorenstein;     // (d-2) mod n == 0
  long long br;        // ceil((d-2)/n) + 1; equals 1 + (d-2)/n when Gorenstein
};

PowerReport power_report(long long d, long long n);

// Z = (pullback of uC) + sum a_i F_i after m point blow-ups with
// multiplicities a_i; on_curve lists the indices whose centers lie on the
// proper transform of C (they contribute to Z.E_0).
struct BlowupDatum {
  long long u = 1;
  std::vector<long long> mults;          // a_i >= 1
  std::vector<std::size_t> on_curve;     // subset of indices into mults
};

struct BlowupAnalysis {
  long long chi;   // chi_uC(d,u) + sum a_i(a_i+1)/2
  long long zsq;   // -(d u^2 + sum a_i^2)
  long long ze0;   // -ud + sum over on_curve of a_i; must be <= 0
};

// Throws std::invalid_argument("not anti-nef: P too heavy") when ze0 > 0.
BlowupAnalysis blowup_analysis(long long d, const BlowupDatum& datum);

// The ideal generated by a generic linear form together with the square of
// the maximal ideal. chi and q for every d >= 3; the two colengths are
// pinned for d = 5 (colength 3 directly, colength of the square via the
// Riemann-Roch consistency chi(2Z) + pg - q).
struct ILReport {
  long long chi;  // d(5-d)/2
  long long q;    // -2 + d + S(d-1)
  std::optional<long long> zsq;        // d = 5 only: -10
  std::optional<long long> colength;   // d = 5 only: 3
  std::optional<long long> colength2;  // d = 5 only: 13
};

ILReport il_report(long long d);

// One combinatorial solution of the chi(Z) = 0 search: either the
// (d-2)-nd power of the maximal ideal on the minimal resolution (empty
// mults), or a blow-up datum with chi = 0 and a subset P of the a_i summing
// to u*d (so Z.E_0 = 0).
struct R2Solution {
  long long u;
  std::vector<long long> mults;  // nonincreasing
  std::string label;             // "m", "m^2", ... or "blowup(u,[a1,...])"
};

// All solutions for 3 <= d <= 8, ordered by (u, mults). The multiset bound
// is the exact Diophantine constraint sum a_i(a_i+1)/2 = -chi_uC(d,u);
// geometric realizability beyond that constraint is not checked, which is
// why results above d = 5 are flagged unverified by classify().
std::vector<R2Solution> search_r2(long long d);

struct Classification {
  std::vector<std::string> labels;  // sorted; "m", "m^2", "m^3", "I(L)", ...
  bool verified;                    // true for 3 <= d <= 5
};

// Ideals whose normal tangent cone is Gorenstein with stabilization index
// >= 2, obtained from search_r2 solutions by dividing each solution cycle Z
// by every integer s with Z/s integral (and automatically anti-nef).
Classification classify(long long d);

}  // namespace ntc
