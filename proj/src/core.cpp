#include "zslab/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zslab {

namespace {

int checked_modulus(int n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(n));
  return n;
}

int reduce(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace

AffineMap::AffineMap(int a_, int b_, int modulus) : a(a_), b(b_), n(checked_modulus(modulus)) {
  if (n == 1) {
    if (a != 1 || b != 0)
      throw std::invalid_argument("for modulus 1 the only affine map is a=1 b=0");
    return;
  }
  if (a < 1 || a >= n || std::gcd(a, n) != 1)
    throw std::invalid_argument("affine coefficient a=" + std::to_string(a) +
                                " is not a unit mod " + std::to_string(n));
  if (b < 0 || b >= n)
    throw std::invalid_argument("affine offset b=" + std::to_string(b) + " out of range");
}

AffineMap AffineMap::identity(int modulus) { return AffineMap(1, 0, checked_modulus(modulus)); }

int AffineMap::apply(int x) const { return reduce(static_cast<long long>(a) * x + b, n); }

AffineMap AffineMap::compose(const AffineMap& inner) const {
  if (inner.n != n) throw std::invalid_argument("modulus mismatch in affine composition");
  if (n == 1) return identity(1);
  return AffineMap(reduce(static_cast<long long>(a) * inner.a, n),
                   reduce(static_cast<long long>(a) * inner.b + b, n), n);
}

AffineMap AffineMap::inverse() const {
  if (n == 1) return identity(1);
  int ai = mod_inverse(a, n);
  return AffineMap(ai, reduce(-static_cast<long long>(ai) * b, n), n);
}

int mod_inverse(int a, int n) {
  if (n == 1) return 1;
  // extended Euclid
  int r0 = n, r1 = ((a % n) + n) % n;
  int t0 = 0, t1 = 1;
  while (r1 != 0) {
    int q = r0 / r1;
    int r2 = r0 - q * r1;
    int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1)
    throw std::invalid_argument(std::to_string(a) + " has no inverse mod " + std::to_string(n));
  return ((t0 % n) + n) % n;
}

ZnSeq::ZnSeq(int modulus) : n_(checked_modulus(modulus)), mult_(n_, 0) {}

ZnSeq::ZnSeq(int modulus, std::vector<int> mult) : n_(checked_modulus(modulus)), mult_(std::move(mult)) {
  if (static_cast<int>(mult_.size()) != n_)
    throw std::invalid_argument("multiplicity vector size != modulus");
  for (int m : mult_) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    len_ += m;
  }
}

ZnSeq ZnSeq::from_terms(int modulus, const std::vector<int>& terms) {
  ZnSeq s(modulus);
  for (int t : terms) s.add(t);
  return s;
}

void ZnSeq::add(int r, int count) {
  r = reduce(r, n_);
  if (mult_[r] + count < 0)
    throw std::invalid_argument("multiplicity of " + std::to_string(r) + " would become negative");
  mult_[r] += count;
  len_ += count;
}

ZnSeq& ZnSeq::operator+=(const ZnSeq& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("modulus mismatch in union");
  for (int r = 0; r < n_; ++r) mult_[r] += rhs.mult_[r];
  len_ += rhs.len_;
  return *this;
}

ZnSeq& ZnSeq::operator-=(const ZnSeq& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("modulus mismatch in difference");
  if (!contains(rhs)) throw std::invalid_argument("multiset difference underflow");
  for (int r = 0; r < n_; ++r) mult_[r] -= rhs.mult_[r];
  len_ -= rhs.len_;
  return *this;
}

bool ZnSeq::contains(const ZnSeq& sub) const {
  if (sub.n_ != n_) return false;
  for (int r = 0; r < n_; ++r)
    if (sub.mult_[r] > mult_[r]) return false;
  return true;
}

int ZnSeq::distinct_terms() const {
  int d = 0;
  for (int m : mult_) d += (m > 0);
  return d;
}

int ZnSeq::sum() const {
  long long s = 0;
  for (int r = 0; r < n_; ++r) s += static_cast<long long>(r) * mult_[r];
  return reduce(s, n_);
}

std::vector<int> ZnSeq::terms() const {
  std::vector<int> out;
  out.reserve(len_);
  for (int r = 0; r < n_; ++r)
    for (int i = 0; i < mult_[r]; ++i) out.push_back(r);
  return out;
}

int lpr(int x, int n) {
  checked_modulus(n);
  x = reduce(x, n);
  return x == 0 ? n : x;
}

int lpr_sum(const ZnSeq& s) {
  int total = 0;
  for (int r = 0; r < s.modulus(); ++r) total += lpr(r, s.modulus()) * s.mult(r);
  return total;
}

ZnSeq one_minus(const ZnSeq& s) {
  ZnSeq out(s.modulus());
  for (int r = 0; r < s.modulus(); ++r)
    if (s.mult(r) > 0) out.add(1 - r, s.mult(r));
  return out;
}

bool lpr_one_minus_identity_check(const ZnSeq& s) {
  const int n = s.modulus();
  int lhs = lpr_sum(one_minus(s));
  int rhs = s.length();
  for (int r = 1; r < n; ++r) rhs += lpr(-r, n) * s.mult(r);
  return lhs == rhs;
}

ZnSeq apply_affine(const ZnSeq& s, const AffineMap& m) {
  if (m.n != s.modulus()) throw std::invalid_argument("modulus mismatch in apply_affine");
  ZnSeq out(s.modulus());
  for (int r = 0; r < s.modulus(); ++r)
    if (s.mult(r) > 0) out.add(m.apply(r), s.mult(r));
  return out;
}

std::vector<int> units(int n) {
  checked_modulus(n);
  if (n == 1) return {1};
  std::vector<int> out;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

std::vector<AffineMap> affine_maps(int n) {
  checked_modulus(n);
  if (n == 1) return {AffineMap::identity(1)};
  std::vector<AffineMap> out;
  for (int a : units(n))
    for (int b = 0; b < n; ++b) out.emplace_back(a, b, n);
  return out;
}

CanonicalForm canonical_similitude(const ZnSeq& s) {
  CanonicalForm best{s, AffineMap::identity(s.modulus())};
  for (const AffineMap& m : affine_maps(s.modulus())) {
    ZnSeq img = apply_affine(s, m);
    if (img.mults() > best.seq.mults()) best = {std::move(img), m};
  }
  return best;
}

CanonicalForm canonical_equivalence(const ZnSeq& s) {
  CanonicalForm best{s, AffineMap::identity(s.modulus())};
  for (int a : units(s.modulus())) {
    AffineMap m(a, 0, s.modulus());
    ZnSeq img = apply_affine(s, m);
    if (img.mults() > best.seq.mults()) best = {std::move(img), m};
  }
  return best;
}

ZnContext::ZnContext(int modulus) : n(checked_modulus(modulus)), unit(units(n)) {
  unit_inv.reserve(unit.size());
  for (int a : unit) unit_inv.push_back(mod_inverse(a, n));
}

bool ZnContext::is_canonical(const std::vector<int>& mult) const {
  // The canonical vector has the global max multiplicity at residue 0
  // (some translation achieves it), so only maps sending a residue of
  // maximal multiplicity to 0 can compete.
  const int maxm = *std::max_element(mult.begin(), mult.end());
  if (mult[0] != maxm) return false;
  for (std::size_t ui = 0; ui < unit.size(); ++ui) {
    const int ai = unit_inv[ui];
    for (int x0 = 0; x0 < n; ++x0) {
      if (mult[x0] != maxm) continue;
      // image of the map a*x - a*x0; image_mult[i] = mult[(ai*i + x0) mod n]
      for (int i = 1; i < n; ++i) {
        int im = mult[(ai * i + x0) % n];
        if (im != mult[i]) {
          if (im > mult[i]) return false;
          break;
        }
      }
    }
  }
  return true;
}

bool is_canonical_similitude(const ZnSeq& s) {
  return ZnContext(s.modulus()).is_canonical(s.mults());
}

ZnSeq parse_seq(const std::string& text) {
  std::istringstream in(text);
  in >> std::ws;
  char c1 = 0, c2 = 0;
  if (!(in >> c1 >> c2) || c1 != 'n' || c2 != '=')
    throw std::invalid_argument("sequence must start with \"n=<modulus>:\"");
  long long n = 0;
  if (!(in >> n)) throw std::invalid_argument("unreadable modulus");
  if (n < 1 || n > 1000000) throw std::invalid_argument("modulus out of range: " + std::to_string(n));
  char colon = 0;
  if (!(in >> colon) || colon != ':') throw std::invalid_argument("missing ':' after modulus");

  ZnSeq s(static_cast<int>(n));
  std::string tok;
  while (in >> tok) {
    std::size_t caret = tok.find('^');
    std::string vs = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    long long value = 0, expo = 1;
    std::size_t pos = 0;
    try {
      value = std::stoll(vs, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad term '" + tok + "'");
    }
    if (pos != vs.size()) throw std::invalid_argument("bad term '" + tok + "'");
    if (caret != std::string::npos) {
      std::string es = tok.substr(caret + 1);
      try {
        expo = std::stoll(es, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in '" + tok + "'");
      }
      if (pos != es.size()) throw std::invalid_argument("bad exponent in '" + tok + "'");
    }
    if (value >= n)
      throw std::invalid_argument("value " + std::to_string(value) + " not below modulus in '" + tok + "'");
    if (expo < 1) throw std::invalid_argument("exponent must be positive in '" + tok + "'");
    if (expo > 1000000) throw std::invalid_argument("exponent out of range in '" + tok + "'");
    s.add(reduce(value, static_cast<int>(n)), static_cast<int>(expo));
  }
  return s;
}

std::string to_string(const ZnSeq& s) {
  std::ostringstream out;
  out << "n=" << s.modulus() << ":";
  for (int r = 0; r < s.modulus(); ++r) {
    if (s.mult(r) == 0) continue;
    out << ' ' << r;
    if (s.mult(r) > 1) out << '^' << s.mult(r);
  }
  return out.str();
}

std::string to_string(const AffineMap& m) {
  return "a=" + std::to_string(m.a) + " b=" + std::to_string(m.b);
}

}  // namespace zslab
