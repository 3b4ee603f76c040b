// Command implementations for the rnarith tool. Kept in a header so the test
// suite can drive run() with its own streams.
#pragma once

#include "rnarith/rnarith.hpp"
#include "rnarith/verify.hpp"

#include <CLI11.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace rnarith::cli {

using Rational = boost::multiprecision::cpp_rational;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

// ---------------------------------------------------------------------------
// Exact conversions

inline Rational to_rational(const DyadicRational& d) {
  const Rational m(d.mantissa());
  if (d.exp() >= 0) return m * Rational(BigInt(BigInt(1) << d.exp()));
  return m / Rational(BigInt(BigInt(1) << -d.exp()));
}

inline std::optional<DyadicRational> dyadic_of(const Rational& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  const unsigned tz = boost::multiprecision::lsb(den);
  if (den != (BigInt(1) << tz)) return std::nullopt;
  return DyadicRational(boost::multiprecision::numerator(x), -static_cast<int>(tz));
}

/// [-]digits[.digits][e[+-]digits]
inline std::optional<Rational> parse_decimal(std::string_view s) {
  std::size_t i = 0;
  const bool neg = i < s.size() && (s[i] == '-' || s[i] == '+') ? s[i++] == '-' : false;
  BigInt digits = 0;
  int scale = 0, count = 0;
  bool point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.' && !point) {
      point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      ++count;
      if (point) --scale;
    } else {
      break;
    }
  }
  if (count == 0) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    const bool eneg = i < s.size() && (s[i] == '-' || s[i] == '+') ? s[i++] == '-' : false;
    int e = 0, ecount = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, ++ecount) {
      e = e * 10 + (s[i] - '0');
      if (e > 100000) return std::nullopt;
    }
    if (ecount == 0) return std::nullopt;
    scale += eneg ? -e : e;
  }
  if (i != s.size()) return std::nullopt;
  const BigInt p10 = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::abs(scale)));
  Rational v = scale >= 0 ? Rational(BigInt(digits * p10)) : Rational(digits, p10);
  return neg ? Rational(-v) : v;
}

/// floor(log2 |x|) for nonzero x.
inline int binade_of(const Rational& x) {
  const Rational m = boost::multiprecision::abs(x);
  const BigInt n = boost::multiprecision::numerator(m), d = boost::multiprecision::denominator(m);
  int e = int(boost::multiprecision::msb(n)) - int(boost::multiprecision::msb(d));
  const auto p2 = [](int k) { return k >= 0 ? Rational(BigInt(BigInt(1) << k)) : Rational(BigInt(1), BigInt(BigInt(1) << -k)); };
  if (m < p2(e)) --e;
  else if (m >= p2(e + 1)) ++e;
  return e;
}

/// Rounds any rational into the format: floor onto a grid two positions
/// below the target and let the remainder flag the tail.
inline Rounded float_from_rational(const Rational& x, FloatFormat fmt, RoundingMode mode) {
  if (x == 0) return {positive_zero(fmt), {}};
  const int e = binade_of(x);
  if (e > fmt.emax() + 1) return {infinity(fmt, x < 0), {true}};
  const int lsb = std::max(e, fmt.emin()) - fmt.fraction_bits() - 2;
  const Rational scaled = lsb >= 0 ? x / Rational(BigInt(BigInt(1) << lsb)) : x * Rational(BigInt(BigInt(1) << -lsb));
  const BigInt n = boost::multiprecision::numerator(scaled), d = boost::multiprecision::denominator(scaled);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  const bool tail = q * d != n;
  const Word w = static_cast<Word>(static_cast<long long>(q));
  return round_to_format(RnFixed::compact(w, lsb, false), fmt, mode, tail);
}

struct FixedConversion {
  RnFixed value;
  bool exact;
};

/// Encodes v at the given LSB. On-grid values pick the r=0 form, or the
/// r=1 form when prefer_round_bit; off-grid values are truncated to nearest.
/// width 0 means the smallest width that holds the result.
inline FixedConversion fixed_from_dyadic(const DyadicRational& v, int lsb, int width, bool prefer_round_bit) {
  if (v.exp() >= lsb) {
    const BigInt n = BigInt(v.mantissa() << (v.exp() - lsb));
    const int need = int(boost::multiprecision::msb(boost::multiprecision::abs(n) + 1)) + 2;
    if (need > 63) throw parse_error("value too large for an rn word");
    const Word nw = static_cast<Word>(static_cast<long long>(n));
    const auto fits = [&](Word b) { return width == 0 || detail::fits_width(b, width); };
    const auto make = [&](Word b, bool r) {
      return FixedConversion{RnFixed(b, width == 0 ? detail::min_width(b) : width, lsb, r), true};
    };
    if (prefer_round_bit && fits(nw - 1)) return make(nw - 1, true);
    if (fits(nw)) return make(nw, false);
    if (fits(nw - 1)) return make(nw - 1, true);
    throw parse_error("value does not fit in " + std::to_string(width) + " bits at lsb " + std::to_string(lsb));
  }
  const int need = int(boost::multiprecision::msb(boost::multiprecision::abs(v.mantissa()) + 1)) + 2;
  if (need > 63) throw parse_error("value too precise for an rn word");
  const Word m = static_cast<Word>(static_cast<long long>(v.mantissa()));
  const RnFixed t = truncate_at(RnFixed::compact(m, v.exp(), false), lsb);
  const RnFixed c = RnFixed::compact(t.bits(), lsb, t.round());
  if (width != 0 && c.width() > width) throw parse_error("value does not fit in " + std::to_string(width) + " bits");
  return {width == 0 ? c : c.with_width(width), false};
}

// ---------------------------------------------------------------------------
// Text forms

/// Signed digits with leading zeros dropped, then " @lsb" when lsb != 0.
inline std::string sd_text(const RnFixed& x) {
  const SignedDigitString sd = sd_of_canonical(x);
  auto first = std::find_if(sd.digits.begin(), sd.digits.end(), [](int d) { return d != 0; });
  if (first == sd.digits.end()) first = sd.digits.end() - 1;
  std::string s;
  for (auto it = first; it != sd.digits.end(); ++it) s += (s.empty() ? "" : " ") + std::to_string(*it);
  if (sd.lsb_exp != 0) s += " @" + std::to_string(sd.lsb_exp);
  return s;
}

/// sd:<digits>[@lsb], digits in {-1,0,1} separated by spaces or commas.
inline RnFixed parse_sd_literal(std::string_view text) {
  if (!text.starts_with("sd:")) throw parse_error("bad sd literal '" + std::string(text) + "'");
  std::string_view body = text.substr(3);
  int lsb = 0;
  if (const auto at = body.find('@'); at != std::string_view::npos) {
    const std::string_view e = body.substr(at + 1);
    const auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), lsb);
    if (ec != std::errc() || p != e.data() + e.size()) throw parse_error("bad sd lsb '" + std::string(e) + "'");
    body = body.substr(0, at);
  }
  SignedDigitString sd;
  sd.lsb_exp = lsb;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == ' ' || body[i] == ',') {
      ++i;
      continue;
    }
    if (body.substr(i, 2) == "-1") {
      sd.digits.push_back(-1);
      i += 2;
    } else if (body[i] == '0' || body[i] == '1') {
      sd.digits.push_back(body[i] - '0');
      ++i;
    } else {
      throw parse_error("bad sd digit at '" + std::string(body.substr(i)) + "'");
    }
  }
  return canonical_of_sd(sd);
}

inline std::string float_value_text(const RnFloat& f) {
  const FloatValue v = value_of_float(f);
  switch (v.kind) {
    case FloatValue::Kind::nan: return "nan";
    case FloatValue::Kind::pos_inf: return "inf";
    case FloatValue::Kind::neg_inf: return "-inf";
    default: return v.value.to_decimal();
  }
}

inline FloatFormat require_format(std::string_view name) {
  if (auto f = format_by_name(name)) return *f;
  throw parse_error("unknown format '" + std::string(name) + "'");
}

inline RoundingMode require_mode(std::string_view name) {
  if (auto m = parse_rounding_mode(name)) return *m;
  throw parse_error("unknown rounding mode '" + std::string(name) + "' (rn, ru, rd, rz, ra)");
}

/// rnfN:0x<hex> or rnfN:<decimal>. inexact is set when a decimal had to round.
inline RnFloat parse_float_literal(std::string_view text, RoundingMode mode, bool* inexact = nullptr) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw parse_error("bad float literal '" + std::string(text) + "'");
  const FloatFormat fmt = require_format(text.substr(0, colon));
  const std::string_view body = text.substr(colon + 1);
  if (body.starts_with("0x") || body.starts_with("0X")) return parse_hex_literal(text);
  const auto v = parse_decimal(body);
  if (!v) throw parse_error("bad float literal '" + std::string(text) + "'");
  const Rounded r = float_from_rational(*v, fmt, mode);
  if (inexact) *inexact = r.sticky.nonzero;
  return r.value;
}

// ---------------------------------------------------------------------------
// convert

using Input = std::variant<RnFixed, RnFloat, Rational>;

inline Input parse_input(const std::string& s, RoundingMode mode, bool& inexact) {
  if (s.starts_with("rn:")) return parse_rn_literal(s);
  if (s.starts_with("sd:")) return parse_sd_literal(s);
  if (s.starts_with("rnf")) return parse_float_literal(s, mode, &inexact);
  if (auto v = parse_decimal(s)) return *v;
  throw parse_error("cannot parse input '" + s + "'");
}

inline Rational finite_value(const Input& in) {
  if (const auto* x = std::get_if<RnFixed>(&in)) return to_rational(value_of(*x));
  if (const auto* f = std::get_if<RnFloat>(&in)) {
    const FloatValue v = value_of_float(*f);
    if (!v.is_finite()) throw parse_error("input is not a finite value");
    return to_rational(v.value);
  }
  return std::get<Rational>(in);
}

inline DyadicRational require_dyadic(const Rational& v) {
  if (auto d = dyadic_of(v)) return *d;
  throw parse_error("value has no finite binary expansion; fixed-point targets need one");
}

inline int cmd_convert(const std::string& input, const std::string& target, bool prefer_round_bit,
                       const std::string& mode_text, std::ostream& out) {
  const RoundingMode mode = require_mode(mode_text);
  bool inexact = false;
  const Input in = parse_input(input, mode, inexact);
  const auto emit = [&](const std::string& s) {
    out << s << (inexact ? " inexact" : "") << "\n";
    return kOk;
  };

  if (target == "sd") {
    if (const auto* x = std::get_if<RnFixed>(&in)) return emit(sd_text(*x));
    if (const auto* f = std::get_if<RnFloat>(&in)) {
      const UnpackedFloat u = unpack(*f);
      if (u.cls == FloatClass::nan || u.cls == FloatClass::infinity) throw parse_error("input is not a finite value");
      return emit(sd_text(scaled_significand(u)));
    }
    throw parse_error("sd needs an rn, sd or float input");
  }
  if (target == "decimal") {
    if (const auto* f = std::get_if<RnFloat>(&in)) return emit(float_value_text(*f));
    const Rational v = finite_value(in);
    if (auto d = dyadic_of(v)) return emit(d->to_decimal());
    throw parse_error("value has no finite decimal expansion");
  }
  if (target == "fields") {
    if (const auto* f = std::get_if<RnFloat>(&in)) return emit(to_fields_string(*f));
    throw parse_error("fields needs a float input");
  }
  if (target.starts_with("float:")) {
    const FloatFormat fmt = require_format(std::string_view(target).substr(6));
    if (const auto* f = std::get_if<RnFloat>(&in)) {
      const FloatClass c = classify(*f);
      if (c == FloatClass::nan) return emit(to_hex_literal(canonical_nan(fmt)));
      if (c == FloatClass::infinity) return emit(to_hex_literal(infinity(fmt, f->sign_bit())));
    }
    const Rounded r = float_from_rational(finite_value(in), fmt, mode);
    inexact = inexact || r.sticky.nonzero;
    return emit(to_hex_literal(r.value));
  }
  if (target == "canonical") {
    if (const auto* x = std::get_if<RnFixed>(&in)) return emit(to_literal(*x));
    if (const auto* f = std::get_if<RnFloat>(&in)) {
      const UnpackedFloat u = unpack(*f);
      if (u.cls == FloatClass::nan || u.cls == FloatClass::infinity) throw parse_error("input is not a finite value");
      return emit(to_literal(scaled_significand(u)));
    }
    const DyadicRational d = require_dyadic(std::get<Rational>(in));
    return emit(to_literal(fixed_from_dyadic(d, std::min(0, d.exp()), 0, prefer_round_bit).value));
  }
  if (target.starts_with("rn@")) {
    // rn@<lsb>[,w=<width>]
    const std::string spec = target.substr(3);
    const auto comma = spec.find(',');
    int lsb = 0, width = 0;
    try {
      std::size_t used = 0;
      lsb = std::stoi(spec.substr(0, comma), &used);
      if (used != spec.substr(0, comma).size()) throw std::invalid_argument("lsb");
      if (comma != std::string::npos) {
        const std::string w = spec.substr(comma + 1);
        if (!w.starts_with("w=")) throw std::invalid_argument("width");
        width = std::stoi(w.substr(2), &used);
        if (used != w.size() - 2 || width < 1 || width > kMaxWidth) throw std::invalid_argument("width");
      }
    } catch (const std::logic_error&) {
      throw parse_error("bad target '" + target + "', expected rn@<lsb>[,w=<width>]");
    }
    const FixedConversion c = fixed_from_dyadic(require_dyadic(finite_value(in)), lsb, width, prefer_round_bit);
    inexact = inexact || !c.exact;
    return emit(to_literal(c.value));
  }
  throw parse_error("unknown target '" + target + "' (sd, canonical, decimal, fields, float:<fmt>, rn@<lsb>[,w=<width>])");
}

// ---------------------------------------------------------------------------
// eval

struct Value {
  std::variant<RnFixed, RnFloat> v;
  bool exact = true;
  std::optional<bool> sticky;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, RoundingMode mode) : s_(text), mode_(mode) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw parse_error("unexpected '" + std::string(s_.substr(pos_)) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) v = binary('+', v, term());
      else if (eat('-')) v = binary('-', v, term());
      else return v;
    }
  }
  Value term() {
    Value v = unary();
    for (;;) {
      if (eat('*')) v = binary('*', v, unary());
      else if (eat('/')) v = binary('/', v, unary());
      else return v;
    }
  }
  Value unary() {
    if (eat('-')) {
      Value v = unary();
      if (auto* x = std::get_if<RnFixed>(&v.v)) v.v = negate(*x);
      else v.v = float_negate(std::get<RnFloat>(v.v));
      return v;
    }
    if (eat('(')) {
      Value v = expr();
      if (!eat(')')) throw parse_error("missing ')'");
      return v;
    }
    return literal();
  }

  Value literal() {
    skip();
    const std::size_t start = pos_;
    const auto at_end = [&] { return pos_ >= s_.size(); };
    if (s_.substr(pos_).starts_with("rn:")) {
      // the only '-' in an rn literal follows '@'
      pos_ += 3;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ':' || s_[pos_] == '@' ||
                           (s_[pos_] == '-' && s_[pos_ - 1] == '@')))
        ++pos_;
      return {parse_rn_literal(s_.substr(start, pos_ - start)), true, std::nullopt};
    }
    if (s_.substr(pos_).starts_with("rnf")) {
      while (!at_end() && s_[pos_] != ':') ++pos_;
      if (at_end()) throw parse_error("bad float literal '" + std::string(s_.substr(start)) + "'");
      ++pos_;
      if (!at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (!at_end()) {
        const char c = s_[pos_];
        const bool sign_after_e = (c == '-' || c == '+') && (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E') &&
                                  s_.substr(start, pos_ - start).find("0x") == std::string_view::npos;
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || sign_after_e) ++pos_;
        else break;
      }
      bool inexact = false;
      const RnFloat f = parse_float_literal(s_.substr(start, pos_ - start), RoundingMode::nearest, &inexact);
      return {f, !inexact, std::nullopt};
    }
    throw parse_error("expected a literal at '" + std::string(s_.substr(start)) + "'");
  }

  Value binary(char op, const Value& a, const Value& b) {
    const bool exact_in = a.exact && b.exact;
    if (a.v.index() != b.v.index()) throw parse_error("format mismatch: fixed and float operands");
    if (const auto* x = std::get_if<RnFixed>(&a.v)) {
      const RnFixed& y = std::get<RnFixed>(b.v);
      const int lsb = std::min(x->lsb_exp(), y.lsb_exp());
      const RnFixed xa = shift_left(*x, x->lsb_exp() - lsb).with_lsb_exp(lsb);
      const RnFixed ya = shift_left(y, y.lsb_exp() - lsb).with_lsb_exp(lsb);
      switch (op) {
        case '+': return {add(xa, ya), exact_in, std::nullopt};
        case '-': return {sub(xa, ya), exact_in, std::nullopt};
        case '*': return {mul(xa, ya), exact_in, std::nullopt};
        default: {
          const DivResult d = div(xa, ya, -lsb);
          return {d.quotient, exact_in && d.exact, std::nullopt};
        }
      }
    }
    const RnFloat& x = std::get<RnFloat>(a.v);
    const RnFloat& y = std::get<RnFloat>(b.v);
    if (!(x.format == y.format)) throw parse_error("format mismatch: " + x.format.name() + " and " + y.format.name());
    Rounded r = op == '+'   ? fadd_with_sticky(x, y, mode_)
                : op == '-' ? fsub_with_sticky(x, y, mode_)
                : op == '*' ? fmul_with_sticky(x, y, mode_)
                            : fdiv_with_sticky(x, y, mode_);
    return {r.value, exact_in && !r.sticky.nonzero, r.sticky.nonzero};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  RoundingMode mode_;
};

inline std::string eval_text(const Value& v) {
  std::string s;
  if (const auto* x = std::get_if<RnFixed>(&v.v)) {
    s = to_literal(*x) + " (= " + value_of(*x).to_decimal() + ")";
  } else {
    const RnFloat& f = std::get<RnFloat>(v.v);
    s = to_hex_literal(f) + " (= " + float_value_text(f) + ")";
  }
  s += v.exact ? " exact" : " inexact";
  if (std::holds_alternative<RnFloat>(v.v)) s += " sticky=" + std::string(v.sticky.value_or(false) ? "1" : "0");
  return s;
}

inline int cmd_eval(const std::string& expr, const std::string& mode_text, std::ostream& out) {
  const Value v = ExprParser(expr, require_mode(mode_text)).parse();
  out << eval_text(v) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// inspect

inline RnFloat parse_inspect_input(const std::string& s, const std::string& format_text) {
  if (s.starts_with("rnf")) return parse_float_literal(s, RoundingMode::nearest);
  if (format_text.empty()) throw parse_error("'" + s + "' needs --format");
  const FloatFormat fmt = require_format(format_text);
  if (s.starts_with("0x") || s.starts_with("0X")) return parse_hex_literal(fmt.name() + ":" + s);
  return parse_fields(fmt, s);
}

inline int cmd_inspect(const std::string& input, const std::string& format_text, std::ostream& out) {
  const RnFloat f = parse_inspect_input(input, format_text);
  const UnpackedFloat u = unpack(f);
  const FloatFormat fmt = f.format;
  const std::string fields = "s=" + std::to_string(int(u.sign)) + " e=" + std::to_string(u.biased_exp) + "(bias " +
                             std::to_string(fmt.bias()) + ")";
  const std::string tail = "f=" + fraction_string(f) + " r=" + std::to_string(int(f.round_bit()));
  switch (u.cls) {
    case FloatClass::zero: out << "class=zero value=0\n"; return kOk;
    case FloatClass::nan: out << "class=nan " << fields << " " << tail << "\n"; return kOk;
    case FloatClass::infinity: out << "class=infinity " << fields << " value=" << float_value_text(f) << "\n"; return kOk;
    case FloatClass::normal:
      out << "class=normal " << fields << " hidden=" << int(!u.sign) << " " << tail << " value=" << float_value_text(f) << "\n";
      break;
    case FloatClass::subnormal:
      out << "class=subnormal " << fields << " " << tail << " value=" << float_value_text(f) << "\n";
      break;
  }
  const RnFixed abs_sig = scaled_significand(u);
  out << "significand=" << to_literal(u.significand) << " exponent=" << unbiased_exp(u)
      << " interval=" << interval_of(abs_sig).to_string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

inline int cmd_verify(const std::string& suite, const verify::Options& opt, std::ostream& out) {
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string all;
    for (const auto& n : names) all += " " + n;
    throw parse_error("unknown suite '" + suite + "'; known:" + all);
  }
  const auto rep = verify::run_suite(suite, opt);
  out << rep.to_text();
  return rep.passed() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

/// args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RN-coded fixed and floating point arithmetic", "rnarith"};
  app.require_subcommand(1);

  std::string input, target = "canonical", mode_text = "rn", expr, format_text, suite;
  bool prefer_round_bit = false;
  verify::Options vopt;
  std::string vformat;

  auto* convert = app.add_subcommand("convert", "Convert between encodings and values");
  convert->add_option("input", input, "rn:/sd:/rnfN: literal or decimal")->required();
  convert->add_option("--to", target, "sd | canonical | decimal | fields | float:<fmt> | rn@<lsb>[,w=<width>]");
  convert->add_flag("--prefer-round-bit", prefer_round_bit, "Emit the r=1 form of on-grid values");
  convert->add_option("--mode", mode_text, "Rounding for float targets: rn ru rd rz ra");

  auto* eval = app.add_subcommand("eval", "Evaluate an infix expression over literals");
  eval->add_option("expr", expr)->required();
  eval->add_option("--mode", mode_text, "Rounding for float operations: rn ru rd rz ra");

  auto* inspect = app.add_subcommand("inspect", "Show the fields of a float word");
  inspect->add_option("word", input, "rnfN:0x.., 0x.. with --format, or a field list")->required();
  inspect->add_option("--format", format_text);

  auto* ver = app.add_subcommand("verify", "Run a verification suite against the exact oracle");
  ver->add_option("suite", suite)->required();
  ver->add_option("--width", vopt.width);
  ver->add_option("--format", vformat);
  ver->add_option("--p", vopt.p);
  ver->add_option("--seed", vopt.seed);
  ver->add_option("--threads", vopt.threads);
  ver->add_option("--samples", vopt.samples);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*convert) return cmd_convert(input, target, prefer_round_bit, mode_text, out);
    if (*eval) return cmd_eval(expr, mode_text, out);
    if (*inspect) return cmd_inspect(input, format_text, out);
    if (!vformat.empty()) vopt.format = require_format(vformat);
    return cmd_verify(suite, vopt, out);
  } catch (const std::exception& e) {
    // parse, contract, domain and range errors all come from the input
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace rnarith::cli
