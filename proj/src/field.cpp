#include "qrep/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include <fmt/format.h>

namespace qrep {
namespace {

// Dense polynomials over GF(p), lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    std::int64_t s2 = s0 - quot * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  std::int64_t s = s0 % static_cast<std::int64_t>(p);
  if (s < 0) s += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(s);
}

// a mod m, m nonzero.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

// Ben-Or: monic f of degree k is irreducible iff gcd(x^(p^i) - x, f) = 1 for 1 <= i <= k/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k <= 1) return k == 1;
  Poly h{0, 1};
  const Poly x{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

// Inverse of a modulo f by the extended Euclidean algorithm; a nonzero mod f.
Poly poly_inverse(const Poly& a, const Poly& f, std::uint64_t p) {
  Poly r0 = f, r1 = poly_mod(a, f, p);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    // quotient of r0 by r1
    Poly quot;
    Poly rem = r0;
    const std::uint64_t lead_inv = inv_mod(r1.back(), p);
    if (rem.size() >= r1.size()) quot.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::size_t shift = rem.size() - r1.size();
      std::uint64_t c = rem.back() * lead_inv % p;
      quot[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + p - c * r1[i] % p) % p;
      trim(rem);
    }
    trim(quot);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant
  const std::uint64_t c = inv_mod(r0[0], p);
  for (auto& x : s0) x = x * c % p;
  return poly_mod(s0, f, p);
}

Poly to_poly(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
  Poly a(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    a[i] = index % p;
    index /= p;
  }
  trim(a);
  return a;
}

std::uint32_t from_poly(const Poly& a, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = a.size(); i-- > 0;) index = index * p + static_cast<std::uint32_t>(a[i]);
  return index;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto first = s.data(), last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty()) {
    throw Error(Errc::Parse, fmt::format("invalid {} '{}'", what, s));
  }
  return v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::uint32_t> parse_list(std::string_view s) {
  std::vector<std::uint32_t> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_uint(strip(s.substr(0, comma)), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> FieldSpec::default_modulus(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return std::vector<std::uint32_t>{0, 1};
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},     // t^2 + t + 1
      {{2, 3}, {1, 1, 0, 1}},  // t^3 + t + 1
      {{3, 2}, {1, 0, 1}},     // t^2 + 1
      {{5, 2}, {3, 0, 1}},     // t^2 + 3
      {{3, 3}, {1, 2, 0, 1}},  // t^3 + 2t + 1
  };
  auto it = table.find({p, k});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeP, fmt::format("p = {} is not prime", p));
  if (k == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(Errc::FieldTooLarge, fmt::format("GF({}^{}) exceeds the supported order {}", p, k, kMaxFieldOrder));
    }
  }
  if (!modulus) {
    modulus = default_modulus(p, k);
    if (!modulus) throw Error(Errc::NoDefaultModulus, fmt::format("no default modulus for GF({}^{})", p, k));
  }
  const auto& mod = *modulus;
  if (mod.size() != k + 1) {
    throw Error(Errc::InvalidArgument, fmt::format("modulus needs {} coefficients, got {}", k + 1, mod.size()));
  }
  for (auto c : mod) {
    if (c >= p) throw Error(Errc::InvalidArgument, fmt::format("modulus coefficient {} not in [0,{})", c, p));
  }
  if (mod.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");

  Poly f(mod.begin(), mod.end());
  if (!is_irreducible(f, p)) {
    throw Error(Errc::ReducibleModulus, fmt::format("modulus is reducible over GF({})", p));
  }

  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = mod;

  const std::uint32_t qq = t->q;
  t->neg.resize(qq);
  for (std::uint32_t a = 0; a < qq; ++a) {
    Poly pa = to_poly(a, p, k);
    Poly n(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) n[i] = (p - pa[i]) % p;
    t->neg[a] = static_cast<std::uint16_t>(from_poly(n, p));
  }
  t->inv.assign(qq, 0);
  for (std::uint32_t a = 1; a < qq; ++a) {
    if (k == 1) {
      t->inv[a] = static_cast<std::uint16_t>(inv_mod(a, p));
    } else {
      t->inv[a] = static_cast<std::uint16_t>(from_poly(poly_inverse(to_poly(a, p, k), f, p), p));
    }
  }

  FieldSpec spec(t);
  if (qq <= 256) {
    t->add.resize(qq * qq);
    t->mul.resize(qq * qq);
    for (std::uint32_t a = 0; a < qq; ++a) {
      for (std::uint32_t b = 0; b < qq; ++b) {
        t->add[a * qq + b] = static_cast<std::uint16_t>(spec.add_digits(FieldElement(a), FieldElement(b)).index());
        t->mul[a * qq + b] = static_cast<std::uint16_t>(spec.mul_reference(FieldElement(a), FieldElement(b)).index());
      }
    }
    t->full_tables = true;
  } else if (k > 1) {
    // Discrete log tables from a primitive element.
    std::vector<std::uint32_t> factors;
    std::uint32_t n = qq - 1;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) factors.push_back(n);
    for (std::uint32_t g = 2; g < qq; ++g) {
      Poly pg = to_poly(g, p, k);
      bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint32_t r) {
        return poly_powmod(pg, (qq - 1) / r, f, p) != Poly{1};
      });
      if (!primitive) continue;
      t->exp.resize(qq - 1);
      t->log.assign(qq, 0);
      std::uint32_t cur = 1;
      for (std::uint32_t e = 0; e + 1 < qq; ++e) {
        t->exp[e] = static_cast<std::uint16_t>(cur);
        t->log[cur] = e;
        cur = spec.mul_reference(FieldElement(cur), FieldElement(g)).index();
      }
      break;
    }
  }
  return spec;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string_view s = strip(text);
  if (s.substr(0, 3) != "GF(") throw Error(Errc::Parse, fmt::format("field must start with 'GF(': '{}'", text));
  auto close = s.find(')');
  if (close == std::string_view::npos) throw Error(Errc::Parse, fmt::format("missing ')' in field '{}'", text));
  std::string_view inner = s.substr(3, close - 3);
  std::string_view rest = strip(s.substr(close + 1));

  std::uint32_t p = 0, k = 1;
  auto caret = inner.find('^');
  if (caret != std::string_view::npos) {
    p = parse_uint(strip(inner.substr(0, caret)), "characteristic");
    k = parse_uint(strip(inner.substr(caret + 1)), "extension degree");
  } else {
    std::uint32_t q = parse_uint(strip(inner), "field order");
    if (q < 2) throw Error(Errc::NonPrimeP, fmt::format("GF({}) is not a field", q));
    std::uint32_t d = 2;
    while (q % d != 0) ++d;
    p = d;
    k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) throw Error(Errc::NonPrimeP, fmt::format("GF({}) order is not a prime power", inner));
  }

  std::optional<std::vector<std::uint32_t>> modulus;
  if (!rest.empty()) {
    if (rest.front() == ':') {
      modulus = parse_list(rest.substr(1));
    } else if (rest.substr(0, 3) == "mod") {
      modulus = parse_list(strip(rest.substr(3)));
    } else {
      throw Error(Errc::Parse, fmt::format("unexpected trailing text '{}' in field", rest));
    }
  }
  return make(p, k, std::move(modulus));
}

FieldElement FieldSpec::element(std::uint32_t index) const {
  if (index >= t_->q) throw Error(Errc::MixedFields, fmt::format("index {} outside GF({})", index, t_->q));
  return FieldElement(index);
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_->k) {
    throw Error(Errc::LengthMismatch, fmt::format("expected {} coefficients, got {}", t_->k, coeffs.size()));
  }
  std::uint32_t index = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= t_->p) throw Error(Errc::InvalidArgument, fmt::format("coefficient {} not in [0,{})", coeffs[i], t_->p));
    index = index * t_->p + coeffs[i];
  }
  return FieldElement(index);
}

std::vector<std::uint32_t> FieldSpec::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> c(t_->k, 0);
  std::uint32_t index = a.index();
  for (std::uint32_t i = 0; i < t_->k; ++i) {
    c[i] = index % t_->p;
    index /= t_->p;
  }
  return c;
}

std::vector<FieldElement> FieldSpec::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(t_->q);
  for (std::uint32_t i = 0; i < t_->q; ++i) out.emplace_back(i);
  return out;
}

FieldElement FieldSpec::add_digits(FieldElement a, FieldElement b) const {
  const std::uint32_t p = t_->p;
  std::uint32_t x = a.index(), y = b.index(), out = 0, scale = 1;
  for (std::uint32_t i = 0; i < t_->k; ++i) {
    std::uint32_t d = x % p + y % p;
    if (d >= p) d -= p;
    out += d * scale;
    scale *= p;
    x /= p;
    y /= p;
  }
  return FieldElement(out);
}

FieldElement FieldSpec::mul_reference(FieldElement a, FieldElement b) const {
  const auto& t = *t_;
  if (t.k == 1) {
    return FieldElement(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.index()) * b.index() % t.p));
  }
  Poly f(t.modulus.begin(), t.modulus.end());
  Poly r = poly_mod(poly_mul(to_poly(a.index(), t.p, t.k), to_poly(b.index(), t.p, t.k), t.p), f, t.p);
  return FieldElement(from_poly(r, t.p));
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return FieldElement(t_->inv[a.index()]);
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::string FieldSpec::format(FieldElement a) const {
  if (t_->k == 1) return std::to_string(a.index());
  auto c = coeffs(a);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(c[i]);
  }
  return out;
}

FieldElement FieldSpec::parse_element(std::string_view text) const {
  std::string_view s = strip(text);
  if (t_->k == 1 || s.find(':') == std::string_view::npos) {
    std::uint32_t v = parse_uint(s, "field element");
    if (v >= t_->p) throw Error(Errc::Parse, fmt::format("element {} not in [0,{})", v, t_->p));
    return FieldElement(v);
  }
  std::vector<std::uint32_t> c;
  while (true) {
    auto colon = s.find(':');
    c.push_back(parse_uint(s.substr(0, colon), "field coefficient"));
    if (colon == std::string_view::npos) break;
    s.remove_prefix(colon + 1);
  }
  if (c.size() != t_->k) throw Error(Errc::Parse, fmt::format("element '{}' needs {} coefficients", text, t_->k));
  for (auto x : c) {
    if (x >= t_->p) throw Error(Errc::Parse, fmt::format("coefficient {} not in [0,{})", x, t_->p));
  }
  return from_coeffs(c);
}

std::string FieldSpec::header() const {
  std::string out = fmt::format("GF({}^{}) mod ", t_->p, t_->k);
  for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t_->modulus[i]);
  }
  return out;
}

FieldElement ff_arith(const FieldSpec& spec, ArithKind kind, FieldElement a, std::optional<FieldElement> b) {
  if (!spec.contains(a) || (b && !spec.contains(*b))) {
    throw Error(Errc::MixedFields, fmt::format("operand outside GF({})", spec.q()));
  }
  const bool binary = kind == ArithKind::Add || kind == ArithKind::Sub || kind == ArithKind::Mul;
  if (binary && !b) throw Error(Errc::InvalidArgument, "binary operation needs two operands");
  switch (kind) {
    case ArithKind::Add: return spec.add(a, *b);
    case ArithKind::Sub: return spec.sub(a, *b);
    case ArithKind::Mul: return spec.mul(a, *b);
    case ArithKind::Inv: return spec.inv(a);
    case ArithKind::Neg: return spec.neg(a);
  }
  return a;
}

}  // namespace qrep
