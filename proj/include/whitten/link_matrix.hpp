#pragma once

#include <array>
#include <string>
#include <vector>

#include "whitten/group.hpp"

namespace whitten {

class LinkingMatrix {
 public:
  LinkingMatrix() = default;
  explicit LinkingMatrix(int mu) : mu_(mu), a_(static_cast<std::size_t>(mu) * mu, 0) {}
  // Throws unless symmetric with zero diagonal.
  static LinkingMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int mu() const { return mu_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * mu_ + j]; }
  void set(int i, int j, int v);  // keeps symmetry
  std::vector<std::vector<int>> rows() const;
  std::string str() const;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  int mu_ = 0;
  std::vector<int> a_;
};

// Lk(gL)_ij = eps0 eps_i eps_j Lk(L)_{p(i) p(j)}
LinkingMatrix act_matrix(const Element& g, const LinkingMatrix& a);
Subgroup stabilizer_bruteforce(const LinkingMatrix& a);

// Three components. z1 = A23, z2 = A13, z3 = A12.
using Triple = std::array<int, 3>;
Triple triple_of(const LinkingMatrix& a);
LinkingMatrix matrix_of(const Triple& z);

// Elements of (Z2)^3 x| S3 reuse Element with eps0 = +1 and eps = delta.
Element f3(const Element& g);
std::array<Element, 2> f3_preimage(const Element& d);
Triple act_triple(const Element& d, const Triple& z);

enum class TripleType { Zero, A00, AmA0, AA0, AB0, AAmA, AAA, ABmB, ABB, ABC };
std::string to_string(TripleType t);

struct TripleClass {
  TripleType type;
  Element normalizer;  // pure permutation in Gamma_3 taking the matrix to its standard form
  Triple standard;
};
TripleClass classify_triple(const Triple& z);
// Stabilizer of a standard-form triple inside (Z2)^3 x| S3, as listed in the
// orbit-type table.
std::vector<Element> image_stabilizer_3(TripleType t);
Subgroup stabilizer_structured_3(const LinkingMatrix& a);

// Four components in the form A14 = A23 = 0, z = (A12, A24, A31, A43).
using Quad = std::array<int, 4>;
bool is_quad_form(const LinkingMatrix& a);
Quad quad_of(const LinkingMatrix& a);
LinkingMatrix matrix_of(const Quad& z);

// G0 < S4 and the automorphism f0.
bool in_g0(const Element& g);
std::vector<Element> g0_permutations();  // as pure permutations in Gamma_4
Element f0(const Element& g);
Element f4(const Element& g);
std::array<Element, 4> f4_preimage(const Element& d);

enum class QuadType { AAAA, AAmAA, AmAmAA };
std::string to_string(QuadType t);
// Throws std::invalid_argument for quads outside the three handled types.
QuadType classify_quad(const Quad& z);
std::vector<Element> image_stabilizer_4(QuadType t);
Subgroup stabilizer_structured_4(const LinkingMatrix& a);

bool mirror_zero_linking_check(const LinkingMatrix& a);

}  // namespace whitten
