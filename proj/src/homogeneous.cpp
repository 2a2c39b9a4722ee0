#include "ntc/homogeneous.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ntc/reduction.hpp"

namespace ntc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

std::string power_label(long long u) {
  return u == 1 ? "m" : "m^" + std::to_string(u);
}

std::string blowup_label(long long u, const std::vector<long long>& mults) {
  std::ostringstream os;
  os << "blowup(" << u << ",[";
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (i) os << ",";
    os << mults[i];
  }
  os << "])";
  return os.str();
}

}  // namespace

long long S(long long t) {
  if (t < 0) bad("S(t) needs t >= 0");
  return t * (t - 1) * (t - 2) / 6;
}

HomogModel model(long long d) {
  if (d < 3) bad("degree must be >= 3");
  HomogModel m;
  m.d = d;
  m.g = (d - 1) * (d - 2) / 2;
  m.Csq = -d;
  m.KC = d * (d - 2);
  m.pg = S(d);
  m.br_m = d - 1;
  return m;
}

long long chi_uC(long long d, long long u) {
  if (d < 3) bad("degree must be >= 3");
  if (u < 0) bad("multiple must be >= 0");
  const long long num = d * u * (u - d + 2);
  if (num % 2 != 0) throw std::logic_error("chi(uC) must be an integer");
  return num / 2;
}

PowerReport power_report(long long d, long long n) {
  if (d < 3) bad("degree must be >= 3");
  if (n < 1 || n > d) bad("power must lie in [1, d]");
  PowerReport rep;
  rep.colength = S(n + 2);
  rep.q = S(d - n);
  rep.gorenstein = (d - 2) % n == 0;
  rep.br = br_power(d - 1, n);
  return rep;
}

BlowupAnalysis blowup_analysis(long long d, const BlowupDatum& datum) {
  if (d < 3) bad("degree must be >= 3");
  if (datum.u < 1) bad("multiple of the central curve must be >= 1");
  for (long long a : datum.mults) {
    if (a < 1) bad("blow-up multiplicities must be >= 1");
  }
  std::set<std::size_t> seen;
  for (std::size_t i : datum.on_curve) {
    if (i >= datum.mults.size()) bad("on_curve index out of range");
    if (!seen.insert(i).second) bad("on_curve index repeated");
  }

  BlowupAnalysis out;
  out.chi = chi_uC(d, datum.u);
  out.zsq = -d * datum.u * datum.u;
  for (long long a : datum.mults) {
    out.chi += a * (a + 1) / 2;
    out.zsq -= a * a;
  }
  out.ze0 = -datum.u * d;
  for (std::size_t i : datum.on_curve) out.ze0 += datum.mults[i];
  if (out.ze0 > 0) throw std::invalid_argument("not anti-nef: P too heavy");
  return out;
}

ILReport il_report(long long d) {
  if (d < 3) bad("degree must be >= 3");
  ILReport rep;
  rep.chi = d * (5 - d) / 2;
  rep.q = -2 + d + S(d - 1);
  if (d == 5) {
    // Independent route to Z^2: one point of multiplicity one blown up at
    // each of the five intersection points of the line with the curve.
    BlowupDatum datum;
    datum.u = 1;
    datum.mults.assign(5, 1);
    for (std::size_t i = 0; i < 5; ++i) datum.on_curve.push_back(i);
    const BlowupAnalysis an = blowup_analysis(d, datum);
    if (an.chi != rep.chi || an.ze0 != 0) {
      throw std::logic_error("blow-up model disagrees with closed form");
    }
    rep.zsq = an.zsq;
    rep.colength = 3;
    // chi(2Z) = 2 chi(Z) - Z^2, so the colength of the square follows from
    // chi(2Z) + pg - q.
    rep.colength2 = (2 * rep.chi - an.zsq) + model(d).pg - rep.q;
  }
  return rep;
}

std::vector<R2Solution> search_r2(long long d) {
  if (d < 3 || d > 8) bad("search supported for 3 <= d <= 8");
  std::vector<R2Solution> out;

  for (long long u = 1; u <= d - 3; ++u) {
    const long long target = -chi_uC(d, u);
    if (target <= 0) throw std::logic_error("chi(uC) must be negative below u = d-2");
    const long long need = u * d;  // subset of the a_i meeting the curve

    std::vector<long long> cur;
    std::function<void(long long, long long)> extend = [&](long long rest, long long max_a) {
      if (rest == 0) {
        // Keep the multiset only if some sub-multiset sums to u*d exactly.
        std::vector<char> reachable(static_cast<std::size_t>(need) + 1, 0);
        reachable[0] = 1;
        for (long long a : cur) {
          for (long long s = need; s >= a; --s) {
            if (reachable[static_cast<std::size_t>(s - a)]) {
              reachable[static_cast<std::size_t>(s)] = 1;
            }
          }
        }
        if (reachable[static_cast<std::size_t>(need)]) {
          out.push_back(R2Solution{u, cur, blowup_label(u, cur)});
        }
        return;
      }
      for (long long a = max_a; a >= 1; --a) {
        const long long w = a * (a + 1) / 2;
        if (w > rest) continue;
        cur.push_back(a);
        extend(rest - w, a);
        cur.pop_back();
      }
    };
    long long max_a = 1;
    while ((max_a + 1) * (max_a + 2) / 2 <= target) ++max_a;
    extend(target, max_a);
  }

  out.push_back(R2Solution{d - 2, {}, power_label(d - 2)});

  std::sort(out.begin(), out.end(), [](const R2Solution& x, const R2Solution& y) {
    return x.u != y.u ? x.u < y.u : x.mults < y.mults;
  });
  return out;
}

Classification classify(long long d) {
  std::set<std::string> labels;
  for (const R2Solution& sol : search_r2(d)) {
    long long g = sol.u;
    for (long long a : sol.mults) g = std::gcd(g, a);
    for (long long s = 1; s <= g; ++s) {
      if (g % s != 0) continue;
      const long long u = sol.u / s;
      std::vector<long long> mults;
      for (long long a : sol.mults) mults.push_back(a / s);
      if (mults.empty()) {
        labels.insert(power_label(u));
      } else if (u == 1 && std::all_of(mults.begin(), mults.end(),
                                       [](long long a) { return a == 1; }) &&
                 static_cast<long long>(mults.size()) == d) {
        labels.insert("I(L)");
      } else {
        labels.insert(blowup_label(u, mults));
      }
    }
  }
  Classification out;
  out.labels.assign(labels.begin(), labels.end());
  out.verified = d <= 5;
  return out;
}

}  // namespace ntc
