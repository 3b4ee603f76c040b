// Exhaustive and sampled verification suites. Each suite runs the library
// against the oracle and collects a VerifyReport; the CLI and the acceptance
// binary both drive these.
#pragma once

#include "rnarith/float_arith.hpp"
#include "rnarith/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace rnarith::verify {

using oracle::ExactRational;
using oracle::VerifyReport;

struct Options {
  int width = 0;                       ///< 0: suite default
  std::optional<FloatFormat> format;   ///< unset: suite default
  int p = 0;                           ///< division fraction bits, 0: 3..5
  std::uint64_t seed = 1;
  int threads = 0;                     ///< 0: hardware concurrency
  int samples = 4096;                  ///< for sampled suites
};

// ---------------------------------------------------------------------------
// Bridges between library types and the oracle's raw fields

inline oracle::FixedWord to_oracle(const RnFixed& x) {
  if (x.width() > 62) throw contract_error("to_oracle: word too wide for the oracle sweep");
  return {static_cast<std::int64_t>(x.bits()), x.width(), x.lsb_exp(), x.round()};
}

inline RnFixed from_oracle(const oracle::FixedWord& w) { return {Word(w.bits), w.width, w.lsb, w.round}; }

inline oracle::FloatLayout layout_of(FloatFormat f) { return {f.exp_bits, f.precision}; }

inline std::string hex(std::uint64_t w) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  do {
    s.insert(s.begin(), kHex[w & 0xf]);
    w >>= 4;
  } while (w);
  return "0x" + s;
}

/// Runs body(begin, end, report) over [0, n) split across threads and
/// merges the partial reports in index order.
inline void parallel_for(std::uint64_t n, int threads, VerifyReport& into,
                         const std::function<void(std::uint64_t, std::uint64_t, VerifyReport&)>& body) {
  unsigned t = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
  t = unsigned(std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, n / 256)));
  if (t <= 1) {
    body(0, n, into);
    return;
  }
  std::vector<VerifyReport> parts(t, VerifyReport(into.suite(), ""));
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (n + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    const std::uint64_t b = std::min(n, i * chunk), e = std::min(n, b + chunk);
    pool.emplace_back([&, i, b, e] { body(b, e, parts[i]); });
  }
  for (auto& th : pool) th.join();
  for (const auto& part : parts) into.merge(part);
}

template <class F>
VerifyReport timed(std::string suite, std::string space, F&& fill) {
  VerifyReport rep(std::move(suite), std::move(space));
  const auto t0 = std::chrono::steady_clock::now();
  fill(rep);
  rep.set_elapsed(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return rep;
}

// ---------------------------------------------------------------------------
// Pinned vectors

inline VerifyReport reference_vectors() {
  return timed("paper-examples", "fixed", [](VerifyReport& rep) {
    const auto expect = [&](bool ok, const std::string& what, const std::string& want, const std::string& got) {
      rep.add_cases(1);
      if (!ok) rep.fail(what, "-", want, got);
    };

    const RnFixed x = parse_rn_literal("rn:110100110010:r0@0");
    const SignedDigitString sd = booth_recode(x.bits(), x.width(), 0);
    const std::vector<int> want_digits{0, -1, 1, -1, 0, 1, 0, -1, 0, 1, -1, 0};
    expect(sd.digits == want_digits, "booth", "0 -1 1 -1 0 1 0 -1 0 1 -1 0", to_string(sd));
    expect(sd_of_canonical(x) == sd, "sd_of_canonical", to_string(sd), to_string(sd_of_canonical(x)));
    expect(value_of(x) == DyadicRational::from_int(-718), "value", "-718", value_of(x).to_decimal());

    const RnFixed t = truncate_at(x, 2);
    expect(to_literal(t) == "rn:1101001100:r1@2", "truncate", "rn:1101001100:r1@2", to_literal(t));
    // a tie: both neighbours are nearest, the encoding picked the upper one
    const auto cand = oracle::reference_round_nearest(-718, 2);
    expect(cand.size() == 2 && value_of(t) == cand[1], "truncate-tie", "-716", value_of(t).to_decimal());

    const RnFixed a = parse_rn_literal("rn:01011:r1@0");
    const RnFixed b = parse_rn_literal("rn:01001:r1@0");
    const RnFixed p = mul(a, b);
    expect(to_literal(p) == "rn:001110111:r1@0", "mul", "rn:001110111:r1@0", to_literal(p));
    const auto ip = oracle::fixed_interval(to_oracle(p));
    const auto image = oracle::interval_image(oracle::fixed_interval(to_oracle(a)), oracle::fixed_interval(to_oracle(b)),
                                              oracle::InclusionOp::mul_nonneg);
    const oracle::RationalInterval want_ip{ExactRational(239, 2), 120};
    const oracle::RationalInterval want_image{ExactRational(437, 4), 120};
    expect(ip.lo == want_ip.lo && ip.hi == want_ip.hi, "mul-interval", want_ip.to_string(), ip.to_string());
    expect(image.lo == want_image.lo && image.hi == want_image.hi, "mul-image", want_image.to_string(), image.to_string());
    expect(ip.subset_of(image), "mul-inclusion", "subset", ip.to_string() + " vs " + image.to_string());

    const RnFixed s = add(a, RnFixed::zero(5, 0));
    expect(value_of(s) == value_of(a) && s.round() == a.round() && s.bits() == a.bits(), "add-neutral",
           to_literal(a), to_literal(s));
    const RnFixed d = sub(a, a);
    const bool all_ones = d.bits() == -1 && d.round();
    expect(all_ones && value_of(d).is_zero(), "sub-self", "rn:111111:r1@0", to_literal(d));
  });
}

// ---------------------------------------------------------------------------
// Fixed point

enum class AddVariant { add, add_alt, sub };

inline VerifyReport fixed_add(AddVariant variant, const Options& opt) {
  const int max_w = opt.width > 0 ? opt.width : 8;
  const char* name = variant == AddVariant::add ? "fixed-add" : variant == AddVariant::add_alt ? "fixed-add-alt" : "fixed-sub";
  return timed(name, "width<=" + std::to_string(max_w), [&](VerifyReport& rep) {
    for (int w = 2; w <= max_w; ++w) {
      const std::uint64_t m = oracle::fixed_space_size(w);
      oracle::guard_size(m * m, name);
      parallel_for(m * m, opt.threads, rep, [&](std::uint64_t b, std::uint64_t e, VerifyReport& part) {
        for (std::uint64_t i = b; i < e; ++i) {
          const auto ow = oracle::fixed_at(w, i / m), ov = oracle::fixed_at(w, i % m);
          const RnFixed x = from_oracle(ow), y = from_oracle(ov);
          const RnFixed z = variant == AddVariant::add ? add(x, y) : variant == AddVariant::add_alt ? add_alt(x, y) : sub(x, y);
          const auto oz = to_oracle(z);
          const auto hx = oracle::fixed_half_units(ow), hz = oracle::fixed_half_units(oz);
          auto hy = oracle::fixed_half_units(ov);
          if (variant == AddVariant::sub) hy = {-hy.value, -hy.hi, -hy.lo};
          const BigInt want = hx.value + hy.value;
          const bool incl = hz.lo >= hx.lo + hy.lo && hz.hi <= hx.hi + hy.hi;
          part.add_cases(1);
          const std::string in = ow.to_string() + "," + ov.to_string();
          if (hz.value != want) part.fail(name, in, want.str() + "/2", hz.value.str() + "/2");
          else if (!incl) part.fail(std::string(name) + "-inclusion", in, "subset", oz.to_string());
        }
      });
    }
  });
}

/// (0,0) times (0,0) is the one pair whose product interval [0 ; u^2/2] is
/// wider than the image [0 ; u^2/4]; every other nonnegative pair is included.
inline bool mul_inclusion_applies(const oracle::FixedWord& a, const oracle::FixedWord& b) {
  return !(a.bits == 0 && !a.round && b.bits == 0 && !b.round);
}

inline VerifyReport fixed_mul(const Options& opt) {
  const int max_w = opt.width > 0 ? opt.width : 6;
  return timed("fixed-mul", "width<=" + std::to_string(max_w), [&](VerifyReport& rep) {
    for (int w = 2; w <= max_w; ++w) {
      const std::uint64_t m = oracle::fixed_space_size(w);
      oracle::guard_size(m * m, "fixed-mul");
      parallel_for(m * m, opt.threads, rep, [&](std::uint64_t b, std::uint64_t e, VerifyReport& part) {
        for (std::uint64_t i = b; i < e; ++i) {
          const auto ow = oracle::fixed_at(w, i / m, -1), ov = oracle::fixed_at(w, i % m, -1);
          const RnFixed z = mul(from_oracle(ow), from_oracle(ov));
          const auto oz = to_oracle(z);
          const ExactRational want = oracle::exact_eval(oracle::Op::mul, oracle::fixed_value(ow), oracle::fixed_value(ov));
          part.add_cases(1);
          const std::string in = ow.to_string() + "," + ov.to_string();
          if (oracle::fixed_value(oz) != want) {
            part.fail("mul", in, oracle::to_string(want), oracle::to_string(oracle::fixed_value(oz)));
            continue;
          }
          if (ow.bits >= 0 && ov.bits >= 0 && mul_inclusion_applies(ow, ov) &&
              !oracle::check_inclusion(oracle::fixed_interval(oz), oracle::fixed_interval(ow), oracle::fixed_interval(ov),
                                       oracle::InclusionOp::mul_nonneg))
            part.fail("mul-inclusion", in, "subset", oracle::fixed_interval(oz).to_string());
        }
      });
    }
  });
}

inline VerifyReport fixed_div(const Options& opt) {
  std::vector<int> ps;
  if (opt.p > 0) ps = {opt.p};
  else ps = {3, 4, 5};
  std::string space = "p=";
  for (int p : ps) space += std::to_string(p) + (p == ps.back() ? "" : ",");
  return timed("fixed-div", space, [&](VerifyReport& rep) {
    for (int p : ps) {
      const std::uint64_t m = oracle::div_operand_count(p);
      oracle::guard_size(m * m, "fixed-div");
      const ExactRational u = oracle::pow2(-p);
      parallel_for(m * m, opt.threads, rep, [&](std::uint64_t b, std::uint64_t e, VerifyReport& part) {
        for (std::uint64_t i = b; i < e; ++i) {
          const auto ox = oracle::div_operand_at(p, i / m), oy = oracle::div_operand_at(p, i % m);
          const DivResult d = div(from_oracle(ox), from_oracle(oy), p);
          const ExactRational q = oracle::div_midpoint_quotient(ox, oy);
          const auto bounds = oracle::div_bounds(ox, oy);
          const ExactRational approx = oracle::fixed_value(to_oracle(d.approx));
          const ExactRational delivered = oracle::fixed_value(to_oracle(d.quotient));
          const std::string in = ox.to_string() + "," + oy.to_string();
          part.add_cases(1);
          if (!bounds.strictly_contains(approx))
            part.fail("div-bounds", in, bounds.to_string(), oracle::to_string(approx));
          if (boost::multiprecision::abs(approx - q) >= u / 4)
            part.fail("div-error", in, "|eps| < u/4", oracle::to_string(approx - q));
          if (d.exact != (approx == q)) part.fail("div-exact", in, approx == q ? "1" : "0", d.exact ? "1" : "0");
          // round bit 1 claims the delivered value is not below q, 0 not above
          const bool law = d.quotient.round() ? delivered >= q : delivered <= q;
          if (!law) part.fail("div-round-bit", in, oracle::to_string(q), oracle::fixed_value(to_oracle(d.quotient)).str());
          if (boost::multiprecision::abs(delivered - q) > oracle::pow2(-p - 1 - d.shift))
            part.fail("div-nearest", in, oracle::to_string(q), oracle::to_string(delivered));

          // the encoded-value form used by the float divider
          const DivResult v = div(from_oracle(ox), from_oracle(oy), p, DivForm::value);
          const ExactRational qv = oracle::fixed_value(ox) / oracle::fixed_value(oy);
          const ExactRational av = oracle::fixed_value(to_oracle(v.approx));
          const bool below_ok = v.approx_below ? (av < qv && qv - av < oracle::pow2(-p - 2)) : av == qv;
          if (!below_ok) part.fail("div-value-form", in, oracle::to_string(qv), oracle::to_string(av));
        }
      });
    }
  });
}

inline VerifyReport truncation(const Options& opt) {
  const int w = opt.width > 0 ? opt.width : 12;
  return timed("truncate", "width=" + std::to_string(w), [&](VerifyReport& rep) {
    const std::uint64_t m = oracle::fixed_space_size(w);
    parallel_for(m, opt.threads, rep, [&](std::uint64_t b, std::uint64_t e, VerifyReport& part) {
      for (std::uint64_t i = b; i < e; ++i) {
        const auto ox = oracle::fixed_at(w, i);
        const RnFixed x = from_oracle(ox);
        const ExactRational v = oracle::fixed_value(ox);
        for (int j = 0; j <= w; ++j) {
          const RnFixed tj = truncate_at(x, j);
          const auto cand = oracle::reference_round_nearest(v, j);
          const DyadicRational got = value_of(tj);
          part.add_cases(1);
          if (std::find(cand.begin(), cand.end(), got) == cand.end())
            part.fail("truncate-nearest", ox.to_string() + " k=" + std::to_string(j), cand.front().to_decimal(),
                      got.to_decimal());
          for (int k = j; k <= w; ++k) {
            part.add_cases(1);
            const RnFixed twice = truncate_at(tj, k), once = truncate_at(x, k);
            if (!(twice == once))
              part.fail("double-rounding", ox.to_string() + " j=" + std::to_string(j) + " k=" + std::to_string(k),
                        to_literal(once), to_literal(twice));
          }
        }
      }
    });
  });
}

inline VerifyReport negation(const Options& opt) {
  const int max_w = opt.width > 0 ? opt.width : 12;
  return timed("negate", "width<=" + std::to_string(max_w) + ",rnf8,rnf16", [&](VerifyReport& rep) {
    for (int w = 1; w <= max_w; ++w) {
      for (const auto& ox : oracle::enumerate_fixed(w)) {
        const RnFixed x = from_oracle(ox);
        const RnFixed n = negate(x);
        rep.add_cases(1);
        if (!(negate(n) == x)) rep.fail("negate-involution", ox.to_string(), to_literal(x), to_literal(negate(n)));
        if (oracle::fixed_value(to_oracle(n)) != -oracle::fixed_value(ox))
          rep.fail("negate-value", ox.to_string(), oracle::to_string(-oracle::fixed_value(ox)), to_literal(n));
      }
    }
    for (FloatFormat fmt : {rnf8, rnf16}) {
      const auto lay = layout_of(fmt);
      for (std::uint64_t wd = 0; wd <= fmt.word_mask(); ++wd) {
        const RnFloat f(fmt, wd);
        const RnFloat n = float_negate(f);
        const auto of = oracle::float_value(lay, wd), on = oracle::float_value(lay, n.word);
        rep.add_cases(1);
        const std::string in = to_hex_literal(f);
        using K = oracle::FloatRef::Kind;
        bool ok;
        switch (of.kind) {
          case K::nan: ok = on.kind == K::nan; break;
          case K::pos_inf: ok = on.kind == K::neg_inf; break;
          case K::neg_inf: ok = on.kind == K::pos_inf; break;
          default:
            ok = on.finite() && on.value == -of.value;
            // zero values come back as +0; every other word is an involution
            if (ok && of.value != 0) ok = float_negate(n).word == wd;
        }
        if (!ok) rep.fail("float-negate", in, "-x", to_hex_literal(n));
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Float format

inline VerifyReport float_format(const Options& opt) {
  const FloatFormat fmt = opt.format.value_or(rnf16);
  return timed("float-format", fmt.name(), [&](VerifyReport& rep) {
    const auto lay = layout_of(fmt);
    const auto check = [&](std::uint64_t wd, VerifyReport& part) {
      const RnFloat f(fmt, wd);
      part.add_cases(1);
      const UnpackedFloat u = unpack(f);
      const RnFloat back = pack(u);
      if (back.word != wd) part.fail("pack-unpack", to_hex_literal(f), hex(wd), hex(back.word));
      const FloatValue v = value_of_float(f);
      const oracle::FloatRef o = oracle::float_value(lay, wd);
      bool same = int(v.kind) == int(o.kind);
      if (same && v.is_finite()) same = oracle::to_rational(v.value) == o.value;
      if (!same) part.fail("value", to_hex_literal(f), oracle::to_string(o.value), v.value.to_decimal());
    };
    if (fmt.total_bits() <= 20) {
      parallel_for(fmt.word_mask() + 1, opt.threads, rep, [&](std::uint64_t b, std::uint64_t e, VerifyReport& part) {
        for (std::uint64_t wd = b; wd < e; ++wd) check(wd, part);
      });
    } else {
      std::mt19937_64 rng(opt.seed);
      for (int i = 0; i < opt.samples; ++i) check(rng() & fmt.word_mask(), rep);
    }
  });
}

// ---------------------------------------------------------------------------
// Float arithmetic

enum class FloatOp { add, mul, div };

inline const char* to_string(FloatOp op) { return op == FloatOp::add ? "fadd" : op == FloatOp::mul ? "fmul" : "fdiv"; }

inline Rounded apply(FloatOp op, const RnFloat& a, const RnFloat& b, RoundingMode mode) {
  switch (op) {
    case FloatOp::add: return fadd_with_sticky(a, b, mode);
    case FloatOp::mul: return fmul_with_sticky(a, b, mode);
    case FloatOp::div: return fdiv_with_sticky(a, b, mode);
  }
  throw contract_error("apply: unknown op");
}

namespace detail {

using Kind = oracle::FloatRef::Kind;

inline bool is_neg(const oracle::FloatRef& v) {
  return v.kind == Kind::neg_inf || (v.kind == Kind::finite && v.value < 0);
}

inline bool is_inf(const oracle::FloatRef& v) { return v.kind == Kind::pos_inf || v.kind == Kind::neg_inf; }

/// Expected kind of a result with a special operand (or a zero divisor), or
/// nullopt when the exact value decides.
inline std::optional<oracle::FloatRef> special_result(FloatOp op, const oracle::FloatRef& a, const oracle::FloatRef& b) {
  using R = oracle::FloatRef;
  const R nan{Kind::nan, 0};
  const auto inf = [](bool neg) { return R{neg ? Kind::neg_inf : Kind::pos_inf, 0}; };
  if (a.kind == Kind::nan || b.kind == Kind::nan) return nan;
  const bool za = a.finite() && a.value == 0, zb = b.finite() && b.value == 0;
  switch (op) {
    case FloatOp::add:
      if (is_inf(a) && is_inf(b)) return a.kind == b.kind ? std::optional(a) : std::optional(nan);
      if (is_inf(a)) return a;
      if (is_inf(b)) return b;
      return std::nullopt;
    case FloatOp::mul:
      if (is_inf(a) || is_inf(b)) return (za || zb) ? nan : inf(is_neg(a) != is_neg(b));
      return std::nullopt;
    case FloatOp::div:
      if (is_inf(a) && is_inf(b)) return nan;
      if (is_inf(a)) return inf(is_neg(a) != is_neg(b));
      if (is_inf(b)) return R{Kind::finite, 0};
      if (zb) return za ? nan : inf(is_neg(a));
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

struct FloatCheck {
  bool bounds = true;      ///< nearest: correctly rounded; directed: direction and one ulp
  bool round_bit = true;   ///< inexact nearest results: r says which side
  bool commute = true;
};

/// Checks one (op, a, b, mode) case. nearest, when given, is the
/// nearest-mode result for the same operands.
inline void check_float_case(FloatOp op, FloatFormat fmt, std::uint64_t wa, std::uint64_t wb, RoundingMode mode,
                             const Rounded& got, const Rounded* nearest, const FloatCheck& what,
                             const std::vector<oracle::FloatRef>& values, VerifyReport& rep) {
  using detail::Kind;
  const auto lay = layout_of(fmt);
  const oracle::FloatRef& a = values[wa];
  const oracle::FloatRef& b = values[wb];
  const oracle::FloatRef r = oracle::float_value(lay, got.value.word);
  const std::string name = std::string(to_string(op)) + "/" + rnarith::to_string(mode);
  const std::string in = hex(wa) + "," + hex(wb);
  const std::string out = hex(got.value.word);
  rep.add_cases(1);

  if (auto sp = detail::special_result(op, a, b)) {
    const bool ok = r.kind == sp->kind && (!sp->finite() || r.value == sp->value);
    if (!ok) rep.fail(name, in, sp->finite() ? oracle::to_string(sp->value) : "special", out);
    return;
  }
  const ExactRational exact =
      oracle::exact_eval(op == FloatOp::add ? oracle::Op::add : op == FloatOp::mul ? oracle::Op::mul : oracle::Op::div,
                         a.value, b.value);
  if (boost::multiprecision::abs(exact) > oracle::largest_finite(lay)) {
    // overflow saturates to infinity in every mode
    const Kind want = exact < 0 ? Kind::neg_inf : Kind::pos_inf;
    if (r.kind != want) rep.fail(name, in, "inf", out);
    return;
  }
  if (!r.finite()) {
    rep.fail(name, in, oracle::to_string(exact), out);
    return;
  }
  const ExactRational& v = r.value;
  const bool inexact = v != exact;
  if (got.sticky.nonzero != inexact) rep.fail(name + "-sticky", in, inexact ? "1" : "0", got.sticky.nonzero ? "1" : "0");
  if (oracle::is_representable(lay, exact) && inexact) rep.fail(name + "-exact", in, oracle::to_string(exact), out);

  if (what.bounds) {
    const int k = oracle::float_grid(lay, exact);
    bool ok;
    if (mode == RoundingMode::nearest) {
      const auto cand = oracle::reference_round_nearest(exact, k);
      ok = std::any_of(cand.begin(), cand.end(), [&](const DyadicRational& c) { return oracle::to_rational(c) == v; });
    } else {
      switch (mode) {
        case RoundingMode::toward_plus_inf: ok = v >= exact; break;
        case RoundingMode::toward_minus_inf: ok = v <= exact; break;
        case RoundingMode::toward_zero: ok = boost::multiprecision::abs(v) <= boost::multiprecision::abs(exact); break;
        default: ok = boost::multiprecision::abs(v) >= boost::multiprecision::abs(exact); break;
      }
      ok = ok && boost::multiprecision::abs(v - exact) < oracle::pow2(k);
      if (!got.sticky.nonzero && nearest && nearest->value.word != got.value.word) ok = false;
    }
    if (!ok) rep.fail(name, in, oracle::to_string(exact), out + "=" + oracle::to_string(v));
  }
  if (what.round_bit && mode == RoundingMode::nearest && inexact) {
    const bool r1 = got.value.round_bit();
    if (r1 ? v < exact : v > exact) rep.fail(name + "-round-bit", in, oracle::to_string(exact), out);
  }
}

inline std::vector<oracle::FloatRef> all_values(FloatFormat fmt) {
  const auto lay = layout_of(fmt);
  std::vector<oracle::FloatRef> v;
  for (std::uint64_t w : oracle::enumerate_float(lay)) v.push_back(oracle::float_value(lay, w));
  return v;
}

/// Sum of the aligned significands before rounding must be exact and inside
/// the operands' interval sum (the far path's stand-in for a distant operand
/// is excluded: it is not the operand).
inline void check_unrounded_sum(FloatFormat fmt, const RnFloat& a, const RnFloat& b,
                                const std::vector<oracle::FloatRef>& values, VerifyReport& rep) {
  if (!rnarith::detail::finite_nonzero(a) || !rnarith::detail::finite_nonzero(b)) return;
  const int gap = std::abs(rnarith::detail::exponent_of(a) - rnarith::detail::exponent_of(b));
  const bool near = a.sign_bit() != b.sign_bit() && gap <= 1;
  if (!near && gap > fmt.precision + 2) return;
  const PathResult path = near ? near_path(a, b) : far_path(a, b);
  const auto lay = layout_of(fmt);
  rep.add_cases(1);
  const std::string in = hex(a.word) + "," + hex(b.word);
  const ExactRational exact = values[a.word].value + values[b.word].value;
  const auto os = to_oracle(path.sum);
  if (oracle::fixed_value(os) != exact) {
    rep.fail(near ? "near-path" : "far-path", in, oracle::to_string(exact), oracle::to_string(oracle::fixed_value(os)));
    return;
  }
  if (path.is_zero()) return;
  if (!oracle::check_inclusion(oracle::fixed_interval(os), oracle::float_interval(lay, a.word),
                               oracle::float_interval(lay, b.word), oracle::InclusionOp::add))
    rep.fail(near ? "near-path-inclusion" : "far-path-inclusion", in, "subset", oracle::fixed_interval(os).to_string());
}

inline VerifyReport float_ops(std::string suite, const std::vector<FloatOp>& ops, const std::vector<RoundingMode>& modes,
                              FloatCheck what, const Options& opt) {
  const FloatFormat fmt = opt.format.value_or(rnf8);
  if (fmt.total_bits() > 12) throw std::length_error("float suites enumerate operand pairs: format too wide");
  return timed(std::move(suite), fmt.name(), [&](VerifyReport& rep) {
    const auto values = all_values(fmt);
    const std::uint64_t m = fmt.word_mask() + 1;
    parallel_for(m * m, opt.threads, rep, [&](std::uint64_t b, std::uint64_t e, VerifyReport& part) {
      for (std::uint64_t i = b; i < e; ++i) {
        const std::uint64_t wa = i / m, wb = i % m;
        const RnFloat x(fmt, wa), y(fmt, wb);
        for (FloatOp op : ops) {
          const Rounded near = apply(op, x, y, RoundingMode::nearest);
          for (RoundingMode mode : modes) {
            const Rounded got = mode == RoundingMode::nearest ? near : apply(op, x, y, mode);
            check_float_case(op, fmt, wa, wb, mode, got, &near, what, values, part);
          }
          if (what.commute && op != FloatOp::div) {
            part.add_cases(1);
            const Rounded swapped = apply(op, y, x, RoundingMode::nearest);
            if (swapped.value.word != near.value.word)
              part.fail(std::string(to_string(op)) + "-commute", hex(wa) + "," + hex(wb), hex(near.value.word),
                        hex(swapped.value.word));
          }
          if (op == FloatOp::add && what.bounds) check_unrounded_sum(fmt, x, y, values, part);
        }
      }
    });
  });
}

inline VerifyReport far_shortcut_suite(const Options& opt) {
  const FloatFormat fmt = opt.format.value_or(rnf8);
  if (fmt.total_bits() > 12) throw std::length_error("far-shortcut enumerates operand pairs: format too wide");
  return timed("far-shortcut", fmt.name(), [&](VerifyReport& rep) {
    const auto lay = layout_of(fmt);
    const auto values = all_values(fmt);
    const std::uint64_t m = fmt.word_mask() + 1;
    for (std::uint64_t wa = 0; wa < m; ++wa) {
      const RnFloat a(fmt, wa);
      if (classify(a) != FloatClass::normal) continue;
      for (std::uint64_t wb = 0; wb < m; ++wb) {
        const RnFloat b(fmt, wb);
        if (!rnarith::detail::finite_nonzero(b)) continue;
        if (rnarith::detail::exponent_of(a) <= rnarith::detail::exponent_of(b) + fmt.precision) continue;
        const RnFloat s = far_shortcut(a, b);
        rep.add_cases(1);
        const std::string in = hex(wa) + "," + hex(wb);
        const ExactRational half_u = oracle::pow2(oracle::float_word_unit(lay, wa) - 1);
        const auto ia = oracle::float_interval(lay, wa);
        const oracle::RationalInterval bound =
            b.sign_bit() ? oracle::RationalInterval{-half_u, 0} : oracle::RationalInterval{0, half_u};
        const auto widened = oracle::interval_image(ia, bound, oracle::InclusionOp::add);
        const auto is = oracle::float_interval(lay, s.word);
        const auto ib = oracle::float_interval(lay, wb);
        if (!is.subset_of(widened)) rep.fail("far-shortcut", in, widened.to_string(), is.to_string());
        if (!ib.subset_of(bound)) rep.fail("far-shortcut-bound", in, bound.to_string(), ib.to_string());
        const ExactRational err = boost::multiprecision::abs(oracle::float_value(lay, s.word).value - values[wa].value -
                                                            values[wb].value);
        if (err >= 2 * half_u) rep.fail("far-shortcut-error", in, "< ulp", oracle::to_string(err));
      }
    }
  });
}

inline const std::vector<RoundingMode>& directed_modes() {
  static const std::vector<RoundingMode> m{RoundingMode::toward_plus_inf, RoundingMode::toward_minus_inf,
                                           RoundingMode::toward_zero, RoundingMode::away_from_zero};
  return m;
}

inline const std::vector<FloatOp>& all_float_ops() {
  static const std::vector<FloatOp> o{FloatOp::add, FloatOp::mul, FloatOp::div};
  return o;
}

// ---------------------------------------------------------------------------
// Suite registry

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "paper-examples", "fixed-add",   "fixed-add-alt",  "fixed-sub",       "fixed-mul",
      "fixed-div",      "truncate",    "negate",         "float-format",    "float-add",
      "float-mul",      "float-div",   "float-directed", "float-round-bit", "far-shortcut",
      "float-all",      "all"};
  return names;
}

inline VerifyReport run_suite(const std::string& name, const Options& opt = {});

inline VerifyReport combined(const std::string& name, const std::vector<std::string>& parts, const Options& opt) {
  return timed(name, "", [&](VerifyReport& rep) {
    for (const auto& p : parts) rep.merge(run_suite(p, opt));
  });
}

inline VerifyReport run_suite(const std::string& name, const Options& opt) {
  const FloatCheck plain{true, false, false};
  if (name == "paper-examples") return reference_vectors();
  if (name == "fixed-add") return fixed_add(AddVariant::add, opt);
  if (name == "fixed-add-alt") return fixed_add(AddVariant::add_alt, opt);
  if (name == "fixed-sub") return fixed_add(AddVariant::sub, opt);
  if (name == "fixed-mul") return fixed_mul(opt);
  if (name == "fixed-div") return fixed_div(opt);
  if (name == "truncate") return truncation(opt);
  if (name == "negate") return negation(opt);
  if (name == "float-format") return float_format(opt);
  if (name == "float-add") return float_ops(name, {FloatOp::add}, {RoundingMode::nearest}, {true, true, true}, opt);
  if (name == "float-mul") return float_ops(name, {FloatOp::mul}, {RoundingMode::nearest}, {true, true, true}, opt);
  if (name == "float-div") return float_ops(name, {FloatOp::div}, {RoundingMode::nearest}, {true, true, true}, opt);
  if (name == "float-directed") return float_ops(name, all_float_ops(), directed_modes(), plain, opt);
  if (name == "float-round-bit")
    return float_ops(name, all_float_ops(), {RoundingMode::nearest}, {false, true, false}, opt);
  if (name == "far-shortcut") return far_shortcut_suite(opt);
  if (name == "float-all")
    return combined(name, {"float-add", "float-mul", "float-div", "float-directed", "far-shortcut"}, opt);
  if (name == "all") {
    // each sub-suite keeps its own default sizes
    Options o = opt;
    o.width = 0;
    o.p = 0;
    o.format.reset();
    return combined(name,
                    {"paper-examples", "fixed-add", "fixed-add-alt", "fixed-sub", "fixed-mul", "fixed-div", "truncate",
                     "negate", "float-format", "float-all"},
                    o);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace rnarith::verify
