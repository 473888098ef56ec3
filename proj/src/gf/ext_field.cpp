#include "bpir/gf/ext_field.hpp"

#include <charconv>
#include <sstream>

#include "bpir/gf/irreducible.hpp"

namespace bpir::gf {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_uint(std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) throw ParseError("not an unsigned integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

ExtField::ExtField(PrimeField base, BasePoly modulus) : base_(base), modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw InvalidParameters("extension modulus must have degree >= 1");
  if (modulus_.leading() != 1) throw InvalidParameters("extension modulus must be monic");
  for (auto c : modulus_.coeffs()) {
    if (!base_.contains(c)) throw FieldMismatch("modulus coefficient outside the base field");
  }
  s_ = static_cast<unsigned>(modulus_.degree());
  if (s_ > kMaxDegree) throw InvalidParameters("extension degree above 32");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < s_; ++i) {
    order *= base_.characteristic();
    if (order > kMaxOrder) throw InvalidParameters("extension field larger than 2^32 elements");
  }
  order_ = order;
  if (!is_irreducible(base_, modulus_)) throw InvalidParameters("extension modulus is not irreducible: " + format_base_poly(modulus_));
}

ExtField ExtField::with_degree(PrimeField base, unsigned s) {
  return ExtField(base, find_irreducibles(base, s, 1).front());
}

ExtField ExtField::from_description(std::string_view text) {
  const auto fields = split(text, ';');
  if (fields.size() != 3 || fields[0].substr(0, 2) != "q=" || fields[1].substr(0, 2) != "s=" ||
      fields[2].substr(0, 4) != "mod=") {
    throw ParseError("field description must read q=<prime>;s=<deg>;mod=<c0:...:1>");
  }
  const auto q = parse_uint(fields[0].substr(2));
  const auto s = parse_uint(fields[1].substr(2));
  if (q > PrimeField::kMaxModulus) throw ParseError("q out of range");
  const PrimeField base(static_cast<std::uint32_t>(q));
  std::vector<std::uint32_t> coeffs;
  for (auto part : split(fields[2].substr(4), ':')) {
    const auto c = parse_uint(part);
    if (c >= q) throw ParseError("modulus coefficient not below q");
    coeffs.push_back(static_cast<std::uint32_t>(c));
  }
  const std::size_t given = coeffs.size();
  BasePoly modulus(std::move(coeffs));
  if (modulus.degree() < 0 || static_cast<std::uint64_t>(modulus.degree()) != s || given != modulus.size()) {
    throw ParseError("modulus degree does not match s");
  }
  return ExtField(base, std::move(modulus));
}

std::string ExtField::description() const {
  return "q=" + std::to_string(base_.characteristic()) + ";s=" + std::to_string(s_) + ";mod=" + format_base_poly(modulus_);
}

void ExtField::check(ExtElem a) const {
  if (a.code >= order_) throw FieldMismatch("element code " + std::to_string(a.code) + " is not in " + description());
}

ExtField::Coords ExtField::coords(ExtElem a) const {
  check(a);
  Coords c{};
  const std::uint64_t q = base_.characteristic();
  std::uint64_t v = a.code;
  for (unsigned d = 0; d < s_; ++d) {
    c[d] = static_cast<std::uint32_t>(v % q);
    v /= q;
  }
  return c;
}

ExtElem ExtField::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > s_) throw DimensionMismatch("too many coordinates for " + description());
  const std::uint64_t q = base_.characteristic();
  std::uint64_t code = 0;
  for (std::size_t d = c.size(); d-- > 0;) {
    if (c[d] >= q) throw FieldMismatch("coordinate outside the base field");
    code = code * q + c[d];
  }
  return {code};
}

ExtElem ExtField::add(ExtElem a, ExtElem b) const {
  if (s_ == 1) return {base_.add(static_cast<std::uint32_t>(a.code), static_cast<std::uint32_t>(b.code))};
  const auto ca = coords(a);
  const auto cb = coords(b);
  Coords out{};
  for (unsigned d = 0; d < s_; ++d) out[d] = base_.add(ca[d], cb[d]);
  return from_coords(std::span(out.data(), s_));
}

ExtElem ExtField::sub(ExtElem a, ExtElem b) const {
  if (s_ == 1) return {base_.sub(static_cast<std::uint32_t>(a.code), static_cast<std::uint32_t>(b.code))};
  const auto ca = coords(a);
  const auto cb = coords(b);
  Coords out{};
  for (unsigned d = 0; d < s_; ++d) out[d] = base_.sub(ca[d], cb[d]);
  return from_coords(std::span(out.data(), s_));
}

ExtElem ExtField::neg(ExtElem a) const { return sub(zero(), a); }

ExtElem ExtField::mul(ExtElem a, ExtElem b) const {
  if (s_ == 1) return {base_.mul(static_cast<std::uint32_t>(a.code), static_cast<std::uint32_t>(b.code))};
  const auto ca = coords(a);
  const auto cb = coords(b);
  const std::uint64_t q = base_.characteristic();
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < s_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j] % q) % q;
  }
  const auto& m = modulus_.coeffs();
  for (unsigned d = 2 * s_ - 2; d >= s_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < s_; ++i) prod[d - s_ + i] = (prod[d - s_ + i] + q - c * m[i] % q) % q;
  }
  Coords out{};
  for (unsigned d = 0; d < s_; ++d) out[d] = static_cast<std::uint32_t>(prod[d]);
  return from_coords(std::span(out.data(), s_));
}

ExtElem ExtField::pow(ExtElem a, std::uint64_t e) const {
  check(a);
  ExtElem result = one(), base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

ExtElem ExtField::inv(ExtElem a) const {
  check(a);
  if (a.code == 0) throw DivisionByZero();
  if (s_ == 1) return {base_.inv(static_cast<std::uint32_t>(a.code))};
  return pow(a, order_ - 2);
}

std::uint32_t ExtField::trace(ExtElem a) const {
  check(a);
  ExtElem acc = a, conj = a;
  for (unsigned i = 1; i < s_; ++i) {
    conj = frobenius(conj);
    acc = add(acc, conj);
  }
  if (!in_base(acc)) throw InternalError("trace left the base field; modulus " + format_base_poly(modulus_) + " is broken");
  return static_cast<std::uint32_t>(acc.code);
}

ExtElem ExtField::embed(std::uint32_t a) const {
  if (!base_.contains(a)) throw FieldMismatch("value " + std::to_string(a) + " is not in the base field");
  return {a};
}

std::uint32_t ExtField::to_base(ExtElem a) const {
  check(a);
  if (!in_base(a)) throw FieldMismatch("element " + format(a) + " is not in the base field");
  return static_cast<std::uint32_t>(a.code);
}

ExtElem ExtField::generator() const {
  if (s_ == 1) return embed(base_.neg(modulus_.coeff(0)));
  return {base_.characteristic()};
}

ExtElem ExtField::from_index(std::uint64_t i) const {
  if (i >= order_) throw IndexOutOfRange("element index " + std::to_string(i) + " outside " + description());
  return {i};
}

std::string ExtField::format(ExtElem a) const {
  const auto c = coords(a);
  std::string out;
  for (unsigned d = 0; d < s_; ++d) {
    if (d != 0) out += ':';
    out += std::to_string(c[d]);
  }
  return out;
}

ExtElem ExtField::parse_element(std::string_view text) const {
  const auto parts = split(text, ':');
  if (parts.size() != s_) {
    throw ParseError("element '" + std::string(text) + "' needs " + std::to_string(s_) + " coordinates");
  }
  Coords c{};
  for (unsigned d = 0; d < s_; ++d) {
    const auto v = parse_uint(parts[d]);
    if (v >= base_.characteristic()) throw ParseError("coordinate " + std::string(parts[d]) + " not below q");
    c[d] = static_cast<std::uint32_t>(v);
  }
  return from_coords(std::span(c.data(), s_));
}

std::uint32_t eval_base(const PrimeField& f, const BasePoly& p, std::uint32_t x) { return poly_eval(f, p, x); }

ExtElem eval_at_ext(const ExtField& ext, const BasePoly& p, ExtElem x) {
  ExtElem acc = ext.zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), ext.embed(p.coeffs()[i]));
  return acc;
}

Poly<ExtElem> embed_poly(const ExtField& ext, const BasePoly& p) {
  std::vector<ExtElem> c;
  c.reserve(p.size());
  for (auto v : p.coeffs()) c.push_back(ext.embed(v));
  return Poly<ExtElem>(std::move(c));
}

std::string format_base_poly(const BasePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (d != 0) out += ':';
    out += std::to_string(p.coeffs()[d]);
  }
  return out;
}

}  // namespace bpir::gf
