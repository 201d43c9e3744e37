#pragma once

#include <compare>
#include <string>
#include <vector>

namespace zslab {

// x -> a*x + b on Z_n, with gcd(a, n) = 1. For n = 1 the only map is a=1, b=0.
struct AffineMap {
  int a = 1;
  int b = 0;
  int n = 1;

  AffineMap() = default;
  AffineMap(int a_, int b_, int modulus);

  static AffineMap identity(int modulus);

  int apply(int x) const;
  // (*this)(inner(x))
  AffineMap compose(const AffineMap& inner) const;
  AffineMap inverse() const;
  bool is_identity() const { return a == 1 && b == 0; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// A finite multiset of residues mod n, stored as a multiplicity vector.
// The empty sequence is legal and has sum 0.
class ZnSeq {
 public:
  explicit ZnSeq(int modulus);
  ZnSeq(int modulus, std::vector<int> mult);

  // Terms are reduced mod n (negatives allowed).
  static ZnSeq from_terms(int modulus, const std::vector<int>& terms);

  int modulus() const { return n_; }
  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  int mult(int r) const { return mult_[r]; }
  const std::vector<int>& mults() const { return mult_; }

  // r is reduced mod n; count may be negative but a multiplicity
  // may never drop below zero.
  void add(int r, int count = 1);

  ZnSeq& operator+=(const ZnSeq& rhs);  // multiset union
  ZnSeq& operator-=(const ZnSeq& rhs);  // multiset difference; rhs must be contained
  friend ZnSeq operator+(ZnSeq lhs, const ZnSeq& rhs) { return lhs += rhs; }
  friend ZnSeq operator-(ZnSeq lhs, const ZnSeq& rhs) { return lhs -= rhs; }

  bool contains(const ZnSeq& sub) const;  // termwise multiplicity <=
  int distinct_terms() const;
  int sum() const;                  // sum of all terms, mod n
  std::vector<int> terms() const;   // expanded term list, ascending

  friend bool operator==(const ZnSeq&, const ZnSeq&) = default;
  friend std::strong_ordering operator<=>(const ZnSeq&, const ZnSeq&) = default;

 private:
  int n_;
  int len_ = 0;
  std::vector<int> mult_;
};

// Least positive representative: the unique integer in [1, n] congruent
// to x. In particular lpr(0) = n.
int lpr(int x, int n);

// L(s): the sum of the least positive representatives of the terms.
int lpr_sum(const ZnSeq& s);

// Each term b replaced by (1 - b) mod n.
ZnSeq one_minus(const ZnSeq& s);

// Self-test hook: L(1-s) always equals sum over nonzero terms of lpr(-b)
// plus the length. Returns whether both evaluations agree.
bool lpr_one_minus_identity_check(const ZnSeq& s);

ZnSeq apply_affine(const ZnSeq& s, const AffineMap& m);

// All a in [1, n-1] with gcd(a, n) = 1, ascending. units(1) = {1}.
std::vector<int> units(int n);

// All n*phi(n) affine maps, ascending by a then by b.
std::vector<AffineMap> affine_maps(int n);

int mod_inverse(int a, int n);

struct CanonicalForm {
  ZnSeq seq;
  AffineMap map;  // witness: apply_affine(input, map) == seq
};

// Orbit representative under all affine maps: the image whose multiplicity
// vector is lexicographically greatest. Two sequences are similar iff their
// canonical forms are equal.
CanonicalForm canonical_similitude(const ZnSeq& s);

// Same rule under multiplication by units only (b = 0).
CanonicalForm canonical_equivalence(const ZnSeq& s);

// Precomputed unit tables for one modulus; used on enumeration hot paths.
struct ZnContext {
  int n;
  std::vector<int> unit;
  std::vector<int> unit_inv;

  explicit ZnContext(int modulus);
  // True iff no affine image of `mult` is lexicographically greater.
  bool is_canonical(const std::vector<int>& mult) const;
};

bool is_canonical_similitude(const ZnSeq& s);

// Text format: "n=<modulus>: v1^m1 v2 ...". Values must be below n
// (negatives are accepted and reduced); exponents must be positive.
ZnSeq parse_seq(const std::string& text);
std::string to_string(const ZnSeq& s);
std::string to_string(const AffineMap& m);

}  // namespace zslab
