// classify.cpp

#include "antican/classify.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "antican/acomplex.hpp"
#include "antican/errors.hpp"
#include "antican/tropfan.hpp"

namespace antican {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string case_name(CaseId c) {
  switch (c) {
    case CaseId::i: return "i";
    case CaseId::ii: return "ii";
    case CaseId::iii: return "iii";
    case CaseId::iv: return "iv";
    case CaseId::v: return "v";
    case CaseId::vi: return "vi";
    case CaseId::vii: return "vii";
    case CaseId::viii: return "viii";
  }
  return "?";
}

std::optional<CaseId> case_from_name(const std::string& s) {
  for (CaseId c : {CaseId::i, CaseId::ii, CaseId::iii, CaseId::iv, CaseId::v, CaseId::vi,
                   CaseId::vii, CaseId::viii})
    if (case_name(c) == s) return c;
  return std::nullopt;
}

namespace {

// ---- integer windows with exact rational endpoints ----

std::int64_t to_i64(const Int& v) { return static_cast<std::int64_t>(v); }

// first integer strictly greater than a/b
std::int64_t int_gt(const Rat& q) { return to_i64(floor_rat(q) + 1); }
// last integer strictly smaller
std::int64_t int_lt(const Rat& q) { return to_i64(ceil_rat(q) - 1); }
std::int64_t int_ge(const Rat& q) { return to_i64(ceil_rat(q)); }
std::int64_t int_le(const Rat& q) { return to_i64(floor_rat(q)); }

// ---- shape builders ----

using I = std::int64_t;

// r=2, n=(2,2,1), m=0, l01=l02=1, block-0 d normalized to ((0,1),(0,0))
DefiningData shape_i(I l11, I l12, I l21, I d111, I d112, I d121, I d211, I d212, I d221) {
  DefiningData dd;
  dd.r = 2;
  dd.s = 2;
  dd.m = 0;
  dd.n = {2, 2, 1};
  dd.L = {{1, 1}, {l11, l12}, {l21}};
  dd.d = {{0, 1, d111, d112, d121}, {0, 0, d211, d212, d221}};
  dd.dprime = {{}, {}};
  return dd;
}

// r=2, n=(3,1,1), m=0, l0=(1,1,1)
DefiningData shape_iv(I l11, I l21, I d111, I d121, I d211, I d221) {
  DefiningData dd;
  dd.r = 2;
  dd.s = 2;
  dd.m = 0;
  dd.n = {3, 1, 1};
  dd.L = {{1, 1, 1}, {l11}, {l21}};
  dd.d = {{0, 1, 0, d111, d121}, {0, 0, 1, d211, d221}};
  dd.dprime = {{}, {}};
  return dd;
}

// r=3, n=(2,2,1,1), m=0, l0=l1=(1,1)
DefiningData shape_ii(I l21, I l31, I d111, I d121, I d131, I d211, I d221, I d231) {
  DefiningData dd;
  dd.r = 3;
  dd.s = 2;
  dd.m = 0;
  dd.n = {2, 2, 1, 1};
  dd.L = {{1, 1}, {1, 1}, {l21}, {l31}};
  dd.d = {{0, 1, d111, 0, d121, d131}, {0, 0, d211, 0, d221, d231}};
  dd.dprime = {{}, {}};
  dd.lambda = {"lambda"};
  return dd;
}

// r=2, n=(2,1,1), m=1, l0=(1,1); the extra column is (0,0,0,1)
DefiningData shape_vi(I l11, I l21, I d111, I d121, I d211, I d221) {
  DefiningData dd;
  dd.r = 2;
  dd.s = 2;
  dd.m = 1;
  dd.n = {2, 1, 1};
  dd.L = {{1, 1}, {l11}, {l21}};
  dd.d = {{0, 1, d111, d121}, {0, 0, d211, d221}};
  dd.dprime = {{0}, {1}};
  return dd;
}

// ---- generators, one per bound record ----
// Window endpoints are transcribed verbatim; strict bounds use int_gt/int_lt.

void gen_i_unit(I l21, const CandidateSink& sink) {
  // l11 = l12 = 1, d112 = d212 = 0:
  //   3 <= (l21+1)*d211 <= 72, 0 <= d111 < d211,
  //   -d211*l21 < d221 < 0, d111*d221/d211 - l21 < d121 < 0
  for (I d211 = std::max<I>(1, int_ge(Rat(3, l21 + 1))); (l21 + 1) * d211 <= 72; ++d211)
    for (I d111 = 0; d111 < d211; ++d111)
      for (I d221 = -d211 * l21 + 1; d221 < 0; ++d221) {
        I lo = int_gt(Rat(d111 * d221, d211) - l21);
        for (I d121 = lo; d121 < 0; ++d121)
          sink(shape_i(1, 1, l21, d111, 0, d121, d211, 0, d221));
      }
}

// d111 window of the normalized shape: the weight-positivity strip
//   -((l21+d121)w21 + d112*w12)/w11 < d111 < -(d121*w21 + d112*w12)/w11
void emit_i_flat_tail(I l11, I l12, I l21, I d121, I d221, I d211, I d212,
                      const CandidateSink& sink) {
  I w11 = -l21 * d212 - l12 * d221;
  I w12 = l21 * d211 + l11 * d221;
  I w21 = -l11 * d212 + l12 * d211;
  if (w11 <= 0 || w12 <= 0 || w21 <= 0) return;
  for (I d112 = 0; d112 < w11; ++d112) {
    I lo = int_gt(Rat(-((l21 + d121) * w21 + d112 * w12), w11));
    I hi = int_lt(Rat(-(d121 * w21 + d112 * w12), w11));
    for (I d111 = lo; d111 <= hi; ++d111)
      sink(shape_i(l11, l12, l21, d111, d112, d121, d211, d212, d221));
  }
}

void gen_i_l21_2_flat(I l11, const CandidateSink& sink) {
  // l21 = 2; two shapes, both bounding the weight sum w11+w12+w21 by 36:
  //   (a) d121 = 1, d221 = 0 with (2+l12)d211 + (2+l11)(-d212) <= 36
  //   (b) d121 = 0, d221 = 1 with (l11-l12) + (2+l12)d211 + (2+l11)(-d212) <= 36
  // In (b) d211 may be nonpositive (down to the w12 > 0 limit); combined with
  // w11, w21 > 0 the sum still forces l11 + l12 <= 68.
  for (I l12 = 1; l12 <= l11; ++l12) {
    for (I d211 = 1; (2 + l12) * d211 + (2 + l11) <= 36; ++d211)
      for (I d212 = -1; (2 + l12) * d211 + (2 + l11) * (-d212) <= 36; --d212)
        emit_i_flat_tail(l11, l12, 2, 1, 0, d211, d212, sink);
    for (I d211 = int_gt(Rat(-l11, 2)); d211 <= 36; ++d211) {
      if ((l11 - l12) + (2 + l12) * d211 + (2 + l11) > 36) continue;
      for (I d212 = -1; (l11 - l12) + (2 + l12) * d211 + (2 + l11) * (-d212) <= 36; --d212)
        emit_i_flat_tail(l11, l12, 2, 0, 1, d211, d212, sink);
    }
  }
}

void emit_i_deep_tail(I l11, I l21, I d121, I d221, I d211, const CandidateSink& sink) {
  // d111 window shared by the deep sub-cases:
  //   (d121+2)d211/d221 < d111 < d121*d211/d221   (l21 = 2)
  //   d211(d121+l21)/d221 < d111 < d211*d121/d221 (l21 >= 3)
  I lo = int_gt(make_rat(d211 * (d121 + l21), d221));
  I hi = int_lt(make_rat(d211 * d121, d221));
  for (I d111 = lo; d111 <= hi; ++d111)
    sink(shape_i(l11, 1, l21, d111, 0, d121, d211, 0, d221));
}

void gen_i_l21_2_deep_l11_2(I, const CandidateSink& sink) {
  // l21 = 2, l11 = 2, l12 = 1: -6 <= d221 <= -3, d211 = 1 - d221,
  // 0 <= d121 < -d221
  for (I d221 = -6; d221 <= -3; ++d221) {
    I d211 = 1 - d221;
    for (I d121 = 0; d121 < -d221; ++d121) emit_i_deep_tail(2, 2, d121, d221, d211, sink);
  }
}

void gen_i_l21_2_deep_l11_ge3(I l11, const CandidateSink& sink) {
  // l21 = 2, l12 = 1, 3 <= l11 < 140:
  //   (-5*l11+2)/(l11-2) < d221 <= -3,
  //   -l11*d221/2 < d211 < -l11*d221/2 + l11/2, 0 <= d121 < -d221
  for (I d221 = int_gt(Rat(-5 * l11 + 2, l11 - 2)); d221 <= -3; ++d221)
    for (I d211 = int_gt(Rat(-l11 * d221, 2)); d211 <= int_lt(Rat(-l11 * d221 + l11, 2)); ++d211)
      for (I d121 = 0; d121 < -d221; ++d121) emit_i_deep_tail(l11, 2, d121, d221, d211, sink);
}

void gen_i_l21_ge3_flat_small(I l21, const CandidateSink& sink) {
  // 3 <= l21 <= 5 with exponent caps per the table:
  //   l21 = 3: l12 <= 4, l11 <= 5; l21 = 4: l12 <= 2, l11 <= 3;
  //   l21 = 5: l12 <= 2, l11 <= 2
  // shape: 0 <= d121, d221 < l21, d121 < d221 unless d221 = 0;
  //   -2 - (l12/l21)(d221+2) < d212 < 0,
  //   -(l11/l21)d221 < d211 < -(l11/l21)d221 + 1 + l11/l21
  I cap11 = l21 == 3 ? 5 : (l21 == 4 ? 3 : 2);
  I cap12 = l21 == 3 ? 4 : 2;
  for (I l11 = 1; l11 <= cap11; ++l11)
    for (I l12 = 1; l12 <= std::min(l11, cap12); ++l12)
      for (I d221 = 0; d221 < l21; ++d221)
        for (I d121 = 0; d121 < (d221 == 0 ? l21 : d221); ++d121)
          for (I d212 = int_gt(Rat(-2 * l21 - l12 * (d221 + 2), l21)); d212 < 0; ++d212)
            for (I d211 = int_gt(Rat(-l11 * d221, l21));
                 d211 <= int_lt(Rat(-l11 * d221 + l21 + l11, l21)); ++d211)
              emit_i_flat_tail(l11, l12, l21, d121, d221, d211, d212, sink);
}

struct PairCap {
  I d111, d211, cap;
};

const PairCap kFlatL112Pairs[] = {{0, 1, 141}, {1, 2, 71},  {1, 3, 71}, {1, 4, 179},
                                  {1, 5, 177}, {2, 3, 137}, {2, 5, 143}};

void gen_i_l21_ge3_flat_l11_2(I pair_idx, const CandidateSink& sink) {
  // l11 = 2, l12 = 1, d112 = d212 = 0, 6 <= l21 <= cap per (d111, d211) pair;
  //   -2(l21+1) < d221 < 0, d111*d221/d211 - l21 < d121 < d111*d221/d211
  const PairCap& pc = kFlatL112Pairs[pair_idx];
  for (I l21 = 6; l21 <= pc.cap; ++l21)
    for (I d221 = -2 * (l21 + 1) + 1; d221 < 0; ++d221) {
      I lo = int_gt(Rat(pc.d111 * d221, pc.d211) - l21);
      I hi = int_lt(Rat(pc.d111 * d221, pc.d211));
      for (I d121 = lo; d121 <= hi; ++d121)
        sink(shape_i(2, 1, l21, pc.d111, 0, d121, pc.d211, 0, d221));
    }
}

void gen_i_l21_ge3_deep(I l21, const CandidateSink& sink) {
  // l11 = 2, l12 = 1, l21 in {3,4}, d112 = d212 = 0:
  //   -4(l21+1) < d221 < 0,
  //   -2*d221/l21 < d211 < -2(d221-1)/l21 + 1, 0 <= d121 < -d221
  for (I d221 = -4 * (l21 + 1) + 1; d221 < 0; ++d221)
    for (I d211 = int_gt(Rat(-2 * d221, l21)); d211 <= int_lt(Rat(-2 * (d221 - 1) + l21, l21));
         ++d211)
      for (I d121 = 0; d121 < -d221; ++d121) emit_i_deep_tail(2, l21, d121, d221, d211, sink);
}

void gen_iv_l21_2a(I l11, const CandidateSink& sink) {
  // l21 = 2, d121 = 1, d221 = 0, l11 <= 69:
  //   -l11/2 - 1 < d211 < 0, -l11 <= d111 < -l11/2
  for (I d211 = int_gt(Rat(-l11 - 2, 2)); d211 < 0; ++d211)
    for (I d111 = -l11; d111 <= int_lt(Rat(-l11, 2)); ++d111)
      sink(shape_iv(l11, 2, d111, 1, d211, 0));
}

void gen_iv_l21_2b(I d111, const CandidateSink& sink) {
  // l21 = 2, d121 = 1, d221 = 1: -35 <= d111 < 0, d111 <= d211 < 0,
  //   max(2, -d111) <= l11 < -2*d211
  for (I d211 = d111; d211 < 0; ++d211)
    for (I l11 = std::max<I>(2, -d111); l11 < -2 * d211; ++l11)
      sink(shape_iv(l11, 2, d111, 1, d211, 1));
}

struct IvPair {
  I d121, d221, cap;
};

const IvPair kIvL213Pairs[] = {{0, 1, 71}, {0, 2, 211}, {1, 1, 103}, {1, 2, 211}, {2, 2, 69}};

void gen_iv_l21_3(I pair_idx, const CandidateSink& sink) {
  // l21 = 3, 0 <= d121 <= d221 < 3 with l11 caps per pair:
  //   -(l11/3)(d121+1) - 1 < d111 < -(l11/3)d121
  //   -(l11/3)(d221+1) - 1 < d211 < -(l11/3)d221
  const IvPair& pc = kIvL213Pairs[pair_idx];
  for (I l11 = 3; l11 <= pc.cap; ++l11)
    for (I d111 = int_gt(Rat(-l11 * (pc.d121 + 1) - 3, 3)); d111 <= int_lt(Rat(-l11 * pc.d121, 3));
         ++d111)
      for (I d211 = int_gt(Rat(-l11 * (pc.d221 + 1) - 3, 3));
           d211 <= int_lt(Rat(-l11 * pc.d221, 3)); ++d211)
        sink(shape_iv(l11, 3, d111, pc.d121, d211, pc.d221));
}

void gen_iv_l21_45(I l21, const CandidateSink& sink) {
  // l21 in {4,5}: l11 < 3*l21/(l21-3), 0 <= d121, d221 < l21,
  //   -l11*d121/l21 - l11 < d111 < -l11*d121/l21,
  //   -l11*d221/l21 - l11 < d211 < -l11*d221/l21
  for (I l11 = l21; l11 <= int_lt(Rat(3 * l21, l21 - 3)); ++l11)
    for (I d121 = 0; d121 < l21; ++d121)
      for (I d221 = 0; d221 < l21; ++d221)
        for (I d111 = int_gt(Rat(-l11 * d121 - l11 * l21, l21));
             d111 <= int_lt(Rat(-l11 * d121, l21)); ++d111)
          for (I d211 = int_gt(Rat(-l11 * d221 - l11 * l21, l21));
               d211 <= int_lt(Rat(-l11 * d221, l21)); ++d211)
            sink(shape_iv(l11, l21, d111, d121, d211, d221));
}

struct IiPair {
  I d131, d231, cap;
};

const IiPair kIiL312Pairs[] = {{0, 1, 33}, {1, 0, 141}, {1, 1, 69}};

void gen_ii_l31_2(I pair_idx, const CandidateSink& sink) {
  // l31 = 2, d211 = 1, d111 = 0 with l21 caps per (d131, d231):
  //   -(l21/2)(d231+1) - 1 < d221 < -(l21/2)d231 and the d211 strip
  //   -d221/l21 - d231/2 < d211 < -d221/l21 - d231/2 + (2+l21)/(2*l21)
  // acts as a filter at d211 = 1. No d121 window is stated for this
  // sub-case; specializing the l31 = 3 window to d111 = 0, d211 = 1 gives
  // (-l21*d131/2 - l21, -l21*d131/2), enumerated here with a generous
  // safety margin of 2*l21+2 on both sides.
  const IiPair& pc = kIiL312Pairs[pair_idx];
  for (I l21 = 2; l21 <= pc.cap; ++l21)
    for (I d221 = int_gt(Rat(-l21 * (pc.d231 + 1) - 2, 2)); d221 <= int_lt(Rat(-l21 * pc.d231, 2));
         ++d221) {
      Rat mid = Rat(-d221, l21) - Rat(pc.d231, 2);
      if (!(mid < 1 && Rat(1) < mid + Rat(2 + l21, 2 * l21))) continue;
      Rat f2 = Rat(-l21 * pc.d131, 2);
      for (I d121 = int_ge(f2 - 3 * l21 - 2); d121 <= int_le(f2 + 2 * l21 + 2); ++d121)
        sink(shape_ii(l21, 2, 0, d121, pc.d131, 1, d221, pc.d231));
    }
}

void gen_ii_l31_3(I l21, const CandidateSink& sink) {
  // l31 = 3, 3 <= l21 <= 5, 0 <= d131, d231 < 3:
  //   -(l21/3)(d231+1) - 1 < d221 < -(l21/3)d231,
  //   -d221/l21 - d231/3 < d211 < -d221/l21 - d231/3 + (3+l21)/(3*l21),
  //   0 <= d111 < 3*d211,
  //   F - l21 < d121 < F,  F = (d111(l21*d231 + 3*d221) - l21*d211*d131)/(3*d211)
  for (I d131 = 0; d131 < 3; ++d131)
    for (I d231 = 0; d231 < 3; ++d231)
      for (I d221 = int_gt(Rat(-l21 * (d231 + 1) - 3, 3)); d221 <= int_lt(Rat(-l21 * d231, 3));
           ++d221) {
        Rat lo = Rat(-d221, l21) - Rat(d231, 3);
        for (I d211 = int_gt(lo); Rat(d211) < lo + Rat(3 + l21, 3 * l21); ++d211)
          for (I d111 = 0; d111 < 3 * d211; ++d111) {
            Rat f = Rat(d111 * (l21 * d231 + 3 * d221) - l21 * d211 * d131, 3 * d211);
            for (I d121 = int_gt(f - l21); d121 <= int_lt(f); ++d121)
              sink(shape_ii(l21, 3, d111, d121, d131, d211, d221, d231));
          }
      }
}

const std::pair<I, I> kViCaps[] = {{2, 140}, {3, 211}, {4, 283}, {5, 19}, {6, 11}, {7, 9}};

void gen_vi(I l21, const CandidateSink& sink) {
  // l11 >= l21, caps per l21; 0 <= d121, d221 < l21:
  //   -l11*d121/l21 - l21 < d111 < -l11*d121/l21,
  //   -(l11/l21)(d221+1) - 1 < d211 < -(l11/l21)d221
  I cap = 0;
  for (const auto& [a, b] : kViCaps)
    if (a == l21) cap = b;
  for (I l11 = l21; l11 <= cap; ++l11)
    for (I d121 = 0; d121 < l21; ++d121)
      for (I d221 = 0; d221 < l21; ++d221)
        for (I d111 = int_gt(Rat(-l11 * d121 - l21 * l21, l21));
             d111 <= int_lt(Rat(-l11 * d121, l21)); ++d111)
          for (I d211 = int_gt(Rat(-l11 * (d221 + 1) - l21, l21));
               d211 <= int_lt(Rat(-l11 * d221, l21)); ++d211)
            sink(shape_vi(l11, l21, d111, d121, d211, d221));
}

std::vector<I> iota_range(I lo, I hi) {
  std::vector<I> v;
  for (I x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

}  // namespace

const std::vector<BoundRecord>& bound_records() {
  static const std::vector<BoundRecord> records = [] {
    std::vector<BoundRecord> r;
    r.push_back({"i.unit_exponents", CaseId::i, false, iota_range(2, 71)});
    r.push_back({"i.l21_2.flat", CaseId::i, false, iota_range(1, 68)});
    r.push_back({"i.l21_2.deep_l11_2", CaseId::i, false, {0}});
    r.push_back({"i.l21_2.deep_l11_ge3", CaseId::i, false, iota_range(3, 139)});
    r.push_back({"i.l21_ge3.flat_small", CaseId::i, false, iota_range(3, 5)});
    r.push_back({"i.l21_ge3.flat_l11_2", CaseId::i, false, iota_range(0, 6)});
    r.push_back({"i.l21_ge3.deep", CaseId::i, false, iota_range(3, 4)});
    r.push_back({"ii.l31_2", CaseId::ii, false, iota_range(0, 2)});
    r.push_back({"ii.l31_3", CaseId::ii, false, iota_range(3, 5)});
    r.push_back({"iii.excluded", CaseId::iii, true, {}});
    r.push_back({"iv.l21_2a", CaseId::iv, false, iota_range(2, 69)});
    r.push_back({"iv.l21_2b", CaseId::iv, false, iota_range(-35, -1)});
    r.push_back({"iv.l21_3", CaseId::iv, false, iota_range(0, 4)});
    r.push_back({"iv.l21_45", CaseId::iv, false, iota_range(4, 5)});
    r.push_back({"v.excluded", CaseId::v, true, {}});
    r.push_back({"vi.main", CaseId::vi, false, iota_range(2, 7)});
    r.push_back({"vii.excluded", CaseId::vii, true, {}});
    r.push_back({"viii.excluded", CaseId::viii, true, {}});
    return r;
  }();
  return records;
}

void generate_shard(const std::string& record_name, std::int64_t shard,
                    const CandidateSink& sink) {
  if (record_name == "i.unit_exponents") return gen_i_unit(shard, sink);
  if (record_name == "i.l21_2.flat") return gen_i_l21_2_flat(shard, sink);
  if (record_name == "i.l21_2.deep_l11_2") return gen_i_l21_2_deep_l11_2(shard, sink);
  if (record_name == "i.l21_2.deep_l11_ge3") return gen_i_l21_2_deep_l11_ge3(shard, sink);
  if (record_name == "i.l21_ge3.flat_small") return gen_i_l21_ge3_flat_small(shard, sink);
  if (record_name == "i.l21_ge3.flat_l11_2") return gen_i_l21_ge3_flat_l11_2(shard, sink);
  if (record_name == "i.l21_ge3.deep") return gen_i_l21_ge3_deep(shard, sink);
  if (record_name == "ii.l31_2") return gen_ii_l31_2(shard, sink);
  if (record_name == "ii.l31_3") return gen_ii_l31_3(shard, sink);
  if (record_name == "iv.l21_2a") return gen_iv_l21_2a(shard, sink);
  if (record_name == "iv.l21_2b") return gen_iv_l21_2b(shard, sink);
  if (record_name == "iv.l21_3") return gen_iv_l21_3(shard, sink);
  if (record_name == "iv.l21_45") return gen_iv_l21_45(shard, sink);
  if (record_name == "vi.main") return gen_vi(shard, sink);
  if (record_name.ends_with(".excluded")) return;
  throw Error("generate_shard: unknown record " + record_name);
}

void enumerate_case(const CaseSpec& spec, const CandidateSink& sink) {
  for (const BoundRecord& rec : bound_records()) {
    if (rec.case_id != spec.id) continue;
    for (std::int64_t s : rec.shards) generate_shard(rec.name, s, sink);
  }
}

GateStats& GateStats::operator+=(const GateStats& o) {
  generated += o.generated;
  invalid += o.invalid;
  not_irredundant += o.not_irredundant;
  not_rank_one += o.not_rank_one;
  not_fano += o.not_fano;
  not_qfactorial += o.not_qfactorial;
  not_log_terminal += o.not_log_terminal;
  not_terminal += o.not_terminal;
  emitted += o.emitted;
  return *this;
}

std::optional<DefiningData> filter_pipeline(const DefiningData& dd, GateStats& st) {
  ++st.generated;

  for (int i = 0; i <= dd.r; ++i) {
    std::int64_t sum = 0;
    for (auto l : dd.L[i]) sum += l;
    if (sum < 2) {
      ++st.not_irredundant;
      return std::nullopt;
    }
  }

  IntMat p = assemble_P(dd);
  {
    std::vector<VecI> cols;
    for (int j = 0; j < p.cols; ++j) {
      VecI c = p.col(j);
      if (!is_primitive(c)) {
        ++st.invalid;
        return std::nullopt;
      }
      cols.push_back(std::move(c));
    }
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
      ++st.invalid;
      return std::nullopt;
    }
  }

  Grading g;
  try {
    g = grading(dd);
  } catch (const Error&) {
    ++st.invalid;
    return std::nullopt;
  }
  if (g.cl.free_rank != 1) {
    ++st.not_rank_one;
    return std::nullopt;
  }

  // positive weights: equivalent to the columns generating the ambient space
  // as a cone at Picard rank one; with kappa > 0 this is the Fano condition
  for (const KClass& w : g.deg)
    if (w.free_part[0] <= 0) {
      ++st.not_fano;
      return std::nullopt;
    }
  if (g.kappa.free_part[0] <= 0) {
    ++st.not_fano;
    return std::nullopt;
  }

  // Q-factoriality is forced here: with all weights nonzero and P of full
  // rank, every (r+s)-subset of columns is linearly independent, so all
  // Sigma-cones are simplicial.

  std::vector<ElemBigCone> cones = elementary_tuples_unchecked(dd);
  for (const ElemBigCone& ec : cones)
    if (ec.ell <= 0) {
      ++st.not_log_terminal;
      return std::nullopt;
    }

  // lineality gate before building the full complex: most rejections happen
  // in dimension s already
  {
    std::vector<VecQ> lin_pts;
    for (const ElemBigCone& ec : cones) {
      VecQ w(dd.s);
      for (int k = 0; k < dd.s; ++k) w[k] = (*ec.v_prime)[dd.r + k];
      lin_pts.push_back(std::move(w));
    }
    for (int k = 0; k < dd.m; ++k) {
      VecQ w(dd.s);
      for (int i = 0; i < dd.s; ++i) w[i] = Rat(dd.dprime[i][k]);
      lin_pts.push_back(std::move(w));
    }
    auto pts = lattice_points(hull(lin_pts));
    if (pts.size() != 1 || !is_zero(pts[0])) {
      ++st.not_terminal;
      return std::nullopt;
    }
  }

  ACComplex ac = build_complex_from_cones(dd, std::move(cones));
  if (terminal_witness(ac)) {
    ++st.not_terminal;
    return std::nullopt;
  }

  ++st.emitted;
  return normalize(dd);
}

namespace {

int worker_count(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv("ANTICAN_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

struct ShardTask {
  const BoundRecord* rec;
  std::int64_t shard;
};

struct ShardResult {
  GateStats stats;
  std::vector<std::string> rows;  // serialized normalized survivors
};

std::string shard_filename(const std::string& dir, const std::string& rec, std::int64_t shard) {
  std::string name = rec;
  for (char& c : name)
    if (c == '.') c = '_';
  return (fs::path(dir) / (name + "__" + std::to_string(shard) + ".json")).string();
}

ordered_json stats_json(const GateStats& s) {
  return ordered_json{{"generated", s.generated},
                      {"invalid", s.invalid},
                      {"not_irredundant", s.not_irredundant},
                      {"not_rank_one", s.not_rank_one},
                      {"not_fano", s.not_fano},
                      {"not_qfactorial", s.not_qfactorial},
                      {"not_log_terminal", s.not_log_terminal},
                      {"not_terminal", s.not_terminal},
                      {"emitted", s.emitted}};
}

GateStats stats_from_json(const ordered_json& j) {
  GateStats s;
  s.generated = j.at("generated").get<std::uint64_t>();
  s.invalid = j.at("invalid").get<std::uint64_t>();
  s.not_irredundant = j.at("not_irredundant").get<std::uint64_t>();
  s.not_rank_one = j.at("not_rank_one").get<std::uint64_t>();
  s.not_fano = j.at("not_fano").get<std::uint64_t>();
  s.not_qfactorial = j.at("not_qfactorial").get<std::uint64_t>();
  s.not_log_terminal = j.at("not_log_terminal").get<std::uint64_t>();
  s.not_terminal = j.at("not_terminal").get<std::uint64_t>();
  s.emitted = j.at("emitted").get<std::uint64_t>();
  return s;
}

std::optional<ShardResult> load_checkpoint(const std::string& file) {
  if (!fs::exists(file)) return std::nullopt;
  std::ifstream in(file);
  std::stringstream buf;
  buf << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(buf.str());
    ShardResult res;
    res.stats = stats_from_json(j.at("stats"));
    for (const auto& row : j.at("rows")) res.rows.push_back(row.get<std::string>());
    return res;
  } catch (const std::exception& e) {
    throw CheckpointCorrupt(file + ": " + e.what());
  }
}

void save_checkpoint(const std::string& file, const std::string& rec, std::int64_t shard,
                     const ShardResult& res) {
  ordered_json j;
  j["record"] = rec;
  j["shard"] = shard;
  j["stats"] = stats_json(res.stats);
  j["rows"] = res.rows;
  std::string tmp = file + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  fs::rename(tmp, file);
}

ShardResult run_shard(const BoundRecord& rec, std::int64_t shard) {
  ShardResult res;
  std::set<std::string> seen;  // dedup inside the shard keeps checkpoints small
  generate_shard(rec.name, shard, [&](DefiningData&& dd) {
    auto survivor = filter_pipeline(dd, res.stats);
    if (survivor) {
      std::string ser = serialize_defining_data(*survivor);
      if (seen.insert(ser).second) res.rows.push_back(std::move(ser));
    }
  });
  return res;
}

}  // namespace

RunResult run_classification(const RunConfig& cfg) {
  std::vector<ShardTask> tasks;
  for (const BoundRecord& rec : bound_records()) {
    if (std::find(cfg.cases.begin(), cfg.cases.end(), rec.case_id) == cfg.cases.end()) continue;
    for (std::int64_t s : rec.shards) tasks.push_back({&rec, s});
  }
  if (!cfg.checkpoint_dir.empty()) fs::create_directories(cfg.checkpoint_dir);

  std::vector<ShardResult> results(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex io_mutex;
  std::exception_ptr first_error;
  auto work = [&] {
    try {
      for (;;) {
        if (failed.load()) break;
        size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        const ShardTask& task = tasks[t];
        std::optional<ShardResult> loaded;
        std::string file;
        if (!cfg.checkpoint_dir.empty()) {
          file = shard_filename(cfg.checkpoint_dir, task.rec->name, task.shard);
          std::lock_guard<std::mutex> lock(io_mutex);
          loaded = load_checkpoint(file);
        }
        if (loaded) {
          results[t] = std::move(*loaded);
          continue;
        }
        ShardResult res = run_shard(*task.rec, task.shard);
        if (!file.empty()) {
          std::lock_guard<std::mutex> lock(io_mutex);
          save_checkpoint(file, task.rec->name, task.shard, res);
        }
        results[t] = std::move(res);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(io_mutex);
      if (!first_error) first_error = std::current_exception();
      failed.store(true);
    }
  };
  const int workers = worker_count(cfg);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  RunResult out;
  std::set<std::string> unique_forms;
  std::map<std::string, ClassRow> by_key;
  for (size_t t = 0; t < tasks.size(); ++t) {
    out.stats += results[t].stats;
    out.per_record[tasks[t].rec->name] += results[t].stats;
    for (const std::string& ser : results[t].rows) {
      if (!unique_forms.insert(ser).second) continue;
      DefiningData dd = parse_defining_data(ser);
      Grading g = grading(dd);
      std::string key = distinctness_key(dd, g);
      auto it = by_key.find(key);
      if (it == by_key.end()) {
        ClassRow row;
        row.data = dd;
        row.inv = compute_invariants(dd, g);
        row.presentation = cox_presentation(dd);
        by_key.emplace(key, std::move(row));
      } else if (ser < serialize_defining_data(it->second.data)) {
        it->second.data = dd;
        it->second.presentation = cox_presentation(dd);
      }
    }
  }
  for (auto& [key, row] : by_key) out.rows.push_back(std::move(row));
  return out;
}

// ---- reference table ----

namespace {

ordered_json kclass_columns_json(const ClassGroup& cl, const std::vector<KClass>& deg) {
  ordered_json free_rows = ordered_json::array();
  for (int i = 0; i < cl.free_rank; ++i) {
    ordered_json row = ordered_json::array();
    for (const KClass& w : deg) row.push_back(w.free_part[i].str());
    free_rows.push_back(row);
  }
  ordered_json tors_rows = ordered_json::array();
  for (size_t i = 0; i < cl.torsion.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (const KClass& w : deg) row.push_back(w.tors[i].str());
    tors_rows.push_back(row);
  }
  return ordered_json{{"free", free_rows}, {"torsion", tors_rows}};
}

std::vector<KClass> kclass_columns_from_json(const ClassGroup& cl, const ordered_json& j,
                                             int count) {
  std::vector<KClass> deg(count);
  const auto& fr = j.at("free");
  if (static_cast<int>(fr.size()) != cl.free_rank) throw SchemaMismatch("degrees: free rows");
  for (int i = 0; i < cl.free_rank; ++i) {
    if (static_cast<int>(fr[i].size()) != count) throw SchemaMismatch("degrees: row length");
    for (int c = 0; c < count; ++c) deg[c].free_part.push_back(Int(fr[i][c].get<std::string>()));
  }
  const auto& tr = j.at("torsion");
  if (tr.size() != cl.torsion.size()) throw SchemaMismatch("degrees: torsion rows");
  for (size_t i = 0; i < cl.torsion.size(); ++i) {
    if (static_cast<int>(tr[i].size()) != count) throw SchemaMismatch("degrees: row length");
    for (int c = 0; c < count; ++c) {
      Int v = Int(tr[i][c].get<std::string>()) % cl.torsion[i];
      if (v < 0) v += cl.torsion[i];
      deg[c].tors.push_back(v);
    }
  }
  return deg;
}

}  // namespace

std::string TableRow::key() const {
  return make_distinctness_key(cl, degrees, rel_exponents, m, lambda_count, antican_cube,
                               gorenstein_index);
}

std::vector<TableRow> parse_table(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw SchemaMismatch(std::string("table: ") + e.what());
  }
  if (!j.is_array()) throw SchemaMismatch("table: expected an array of rows");
  std::vector<TableRow> rows;
  for (const auto& rj : j) {
    try {
      TableRow r;
      r.no = rj.at("no").get<int>();
      r.relations = rj.at("relations").get<std::string>();
      for (const auto& t : rj.at("exponents")) {
        std::vector<Int> tup;
        for (const auto& x : t) tup.push_back(Int(x.get<long long>()));
        std::sort(tup.rbegin(), tup.rend());
        r.rel_exponents.push_back(std::move(tup));
      }
      std::sort(r.rel_exponents.begin(), r.rel_exponents.end());
      r.generators = rj.at("generators").get<int>();
      r.m = rj.at("m").get<int>();
      r.lambda_count = rj.at("lambda").get<int>();
      r.cl.free_rank = rj.at("class_group").at("free_rank").get<int>();
      for (const auto& x : rj.at("class_group").at("torsion"))
        r.cl.torsion.push_back(Int(x.get<long long>()));
      r.degrees = kclass_columns_from_json(r.cl, rj.at("degrees"), r.generators);
      r.antican_cube = rat_parse(rj.at("antican_cube").get<std::string>());
      r.gorenstein_index = Int(rj.at("gorenstein_index").get<long long>());
      rows.push_back(std::move(r));
    } catch (const SchemaMismatch&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaMismatch(std::string("table row: ") + e.what());
    }
  }
  return rows;
}

std::string serialize_table(const std::vector<TableRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const TableRow& r : rows) {
    ordered_json rj;
    rj["no"] = r.no;
    rj["relations"] = r.relations;
    ordered_json ex = ordered_json::array();
    for (const auto& t : r.rel_exponents) {
      ordered_json tt = ordered_json::array();
      for (const Int& x : t) tt.push_back(static_cast<long long>(x));
      ex.push_back(tt);
    }
    rj["exponents"] = ex;
    rj["generators"] = r.generators;
    rj["m"] = r.m;
    rj["lambda"] = r.lambda_count;
    ordered_json tors = ordered_json::array();
    for (const Int& d : r.cl.torsion) tors.push_back(static_cast<long long>(d));
    rj["class_group"] = ordered_json{{"free_rank", r.cl.free_rank}, {"torsion", tors}};
    rj["degrees"] = kclass_columns_json(r.cl, r.degrees);
    rj["antican_cube"] = rat_str(r.antican_cube);
    rj["gorenstein_index"] = static_cast<long long>(r.gorenstein_index);
    arr.push_back(std::move(rj));
  }
  return arr.dump(1);
}

namespace {

// key without the numeric invariants, for near-miss reporting
std::string structural_key(const ClassGroup& cl, const std::vector<KClass>& degrees,
                           const std::vector<std::vector<Int>>& ex, int m, int lam) {
  return make_distinctness_key(cl, degrees, ex, m, lam, std::nullopt, std::nullopt);
}

}  // namespace

std::string DiffReport::summary() const {
  std::ostringstream os;
  os << matched << "/" << per_row.size() << " matched";
  if (missing) os << ", " << missing << " missing";
  if (extra) os << ", " << extra << " extra";
  return os.str();
}

DiffReport diff_table(std::vector<ClassRow>& result, const std::vector<TableRow>& expected) {
  DiffReport rep;
  std::vector<bool> used(result.size(), false);
  for (const TableRow& tr : expected) {
    RowDiff rd;
    rd.table_no = tr.no;
    std::string tkey = tr.key();
    for (size_t i = 0; i < result.size(); ++i) {
      if (used[i]) continue;
      if (result[i].inv.key == tkey) {
        rd.matched = true;
        used[i] = true;
        result[i].table_no = tr.no;
        break;
      }
    }
    if (!rd.matched) {
      // near miss: same structure, different numeric invariants
      std::string tstruct = structural_key(tr.cl, tr.degrees, tr.rel_exponents, tr.m, tr.lambda_count);
      for (size_t i = 0; i < result.size(); ++i) {
        if (used[i]) continue;
        const InvariantSet& inv = result[i].inv;
        if (structural_key(inv.cl, inv.degrees, inv.rel_exponents,
                           result[i].data.m, inv.lambda_count) != tstruct)
          continue;
        if (inv.antican_cube != tr.antican_cube)
          rd.field_diffs.push_back("antican_cube: " + rat_str(inv.antican_cube) + " vs " +
                                   rat_str(tr.antican_cube));
        if (inv.gorenstein_index != tr.gorenstein_index)
          rd.field_diffs.push_back("gorenstein_index: " + inv.gorenstein_index.str() + " vs " +
                                   tr.gorenstein_index.str());
        break;
      }
      ++rep.missing;
    } else {
      ++rep.matched;
    }
    rep.per_row.push_back(std::move(rd));
  }
  for (size_t i = 0; i < result.size(); ++i)
    if (!used[i]) ++rep.extra;
  return rep;
}

std::string rows_to_json(const std::vector<ClassRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const ClassRow& row : rows) {
    ordered_json rj;
    rj["no"] = row.table_no ? ordered_json(*row.table_no) : ordered_json(nullptr);
    rj["relations"] = row.presentation.text();
    rj["class_group"] = ordered_json{{"free_rank", row.inv.cl.free_rank},
                                     {"torsion", [&] {
                                        ordered_json t = ordered_json::array();
                                        for (const Int& d : row.inv.cl.torsion)
                                          t.push_back(static_cast<long long>(d));
                                        return t;
                                      }()}};
    rj["degree_matrix"] = kclass_columns_json(row.inv.cl, row.inv.degrees);
    rj["antican_cube"] = row.inv.antican_cube_defined ? rat_str(row.inv.antican_cube) : "";
    rj["gorenstein_index"] = static_cast<long long>(row.inv.gorenstein_index);
    rj["key"] = row.inv.key;
    rj["data"] = ordered_json::parse(serialize_defining_data(row.data));
    arr.push_back(std::move(rj));
  }
  return arr.dump(1);
}

std::string rows_to_csv(const std::vector<ClassRow>& rows) {
  std::ostringstream os;
  os << "no,relations,class_group,degree_matrix,antican_cube,gorenstein_index\n";
  for (const ClassRow& row : rows) {
    os << (row.table_no ? std::to_string(*row.table_no) : "");
    os << "," << row.presentation.text();
    os << ",Z";
    for (const Int& d : row.inv.cl.torsion) os << "+Z/" << d;
    os << ",\"";
    for (size_t c = 0; c < row.inv.degrees.size(); ++c) {
      if (c) os << ";";
      const KClass& w = row.inv.degrees[c];
      os << "(";
      for (size_t i = 0; i < w.free_part.size(); ++i) os << (i ? "," : "") << w.free_part[i];
      for (size_t i = 0; i < w.tors.size(); ++i) os << ",_" << w.tors[i];
      os << ")";
    }
    os << "\"," << (row.inv.antican_cube_defined ? rat_str(row.inv.antican_cube) : "");
    os << "," << row.inv.gorenstein_index << "\n";
  }
  return os.str();
}

std::string stats_to_json(const RunResult& r) {
  ordered_json j;
  j["total"] = stats_json(r.stats);
  ordered_json per = ordered_json::object();
  for (const auto& [name, st] : r.per_record) per[name] = stats_json(st);
  j["per_record"] = per;
  j["rows"] = r.rows.size();
  return j.dump(1);
}

}  // namespace antican
