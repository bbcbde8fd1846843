#include "catalog_data.hpp"

// Classification tables, transcribed row by row. Row anchors:
//   table:nilpotent-orbits#1..#31        orbit representatives and N-family
//   list:nilpotent-parts#i,j             nilpotent parts of mixed elements
//   table:nilpotent-parts#i,j            N-family of n_{i,j} (i = 2, 3, 4, 7, 10)
//   table:semisimple-centralisers#1..#10
//   table:mixed-s-classes#1..#12
//   table:nilpotent-centralisers#N2..#N9
//   table:d-families#D1..#D9
//   table:semisimple-s-classes#1..#6

namespace slocc::data {

namespace {

using GR = GaussianRational;
using Params = std::span<const GR>;

Mat2 inv(const Mat2& x) { return x.adjugate(); }
Mat2 tr(const Mat2& x) { return x.transpose(); }
Mat2 Dinv(const GR& u) { return mat::D(u.inverse()); }

}  // namespace

const std::vector<NilpotentOrbitRow>& nilpotent_orbit_rows() {
  static const std::vector<NilpotentOrbitRow> rows{
      {"e1100", 2},                              // #1
      {"e1100 + e0000", 3},                      // #2
      {"e1100 + e1001", 3},                      // #3
      {"e1100 + e1010", 3},                      // #4
      {"e1101 + e0100", 3},                      // #5
      {"e1110 + e0100", 3},                      // #6
      {"e1110 + e1101", 3},                      // #7
      {"e1101 + e0100 + e1000", 6},              // #8
      {"e1110 + e0100 + e1000", 6},              // #9
      {"e1110 + e1101 + e1000", 6},              // #10
      {"e1110 + e1101 + e0100", 6},              // #11
      {"e0101 + e1100 + e1001 + e0000", 9},      // #12
      {"e0110 + e1100 + e1010 + e0000", 9},      // #13
      {"e1111 + e1100 + e1001 + e1010", 9},      // #14
      {"e0111 + e1110 + e1101 + e0100", 9},      // #15
      {"e1110 + e1101 + e0100 + e1000", 4},      // #16
      {"e1110 + e1101 + e0000", 5},              // #17
      {"e1110 + e0100 + e1001", 5},              // #18
      {"e1101 + e0100 + e1010", 5},              // #19
      {"e0101 + e1110 + e1000", 5},              // #20
      {"e0110 + e1101 + e1000", 5},              // #21
      {"e1111 + e0100 + e1000", 5},              // #22
      {"e1110 + e0100 + e0000 + e1001", 8},      // #23
      {"e0110 + e1101 + e1000 + e0000", 8},      // #24
      {"e1111 + e0100 + e1000 + e1001", 8},      // #25
      {"e1111 + e0100 + e1000 + e1010", 8},      // #26
      {"e0101 + e1110 + e0000 + e1001", 7},      // #27
      {"e0110 + e1101 + e0000 + e1010", 7},      // #28
      {"e1111 + e0100 + e1001 + e1010", 7},      // #29
      {"e1111 + e0110 + e0101 + e1000", 7},      // #30
      {"0", 1},                                  // #31
  };
  return rows;
}

const std::vector<MixedPartRow>& mixed_part_rows() {
  static const std::vector<MixedPartRow> rows{
      {2, 1, "e0011", 2},
      {3, 1, "e0011", 2},
      {3, 2, "e0111 + e1011 + e0010 + e0001", 4},
      {4, 1, "e0110 + e1010", 3},
      {4, 2, "e0110 + e0101", 3},
      {4, 3, "e0110", 2},
      {4, 4, "e0101", 2},
      {5, 1, "e0110 + e1100", 0},
      {5, 2, "e0110 + e0011", 0},
      {5, 3, "e0110", 0},
      {5, 4, "e0011", 0},
      {6, 1, "e0011 + e1010", 0},
      {6, 2, "e0011 + e0101", 0},
      {6, 3, "e0011", 0},
      {6, 4, "e0101", 0},
      {7, 1, "e1101 + e1011 + e1000 + e0001", 4},
      {7, 2, "e1101 + e1010 + e0001", 5},
      {7, 3, "e1011 + e1000 + e0101", 5},
      {7, 4, "e1011 + e1000", 3},
      {7, 5, "e1101 + e0001", 3},
      {7, 6, "e1001", 2},
      {8, 1, "e1011 + e1101 + e1000 + e0001", 0},
      {8, 2, "e1011 + e1100 + e0001", 0},
      {8, 3, "e1101 + e1000 + e0011", 0},
      {8, 4, "e1101 + e1000", 0},
      {8, 5, "e1011 + e0001", 0},
      {8, 6, "e1001", 0},
      {9, 1, "e1101 + e1110 + e1000 + e0100", 0},
      {9, 2, "e1101 + e1010 + e0100", 0},
      {9, 3, "e1110 + e1000 + e0101", 0},
      {9, 4, "e1110 + e1000", 0},
      {9, 5, "e1101 + e0100", 0},
      {9, 6, "e1100", 0},
      {10, 1, "e1100 + e1010 + e0110", 6},
      {10, 2, "e1010 + e0110", 3},
      {10, 3, "e1010 + e0110 + e0011", 6},
      {10, 4, "e1100 + e0110", 3},
      {10, 5, "e0110", 2},
      {10, 6, "e0110 + e0011", 3},
      {10, 7, "e1100 + e0110 + e0101", 6},
      {10, 8, "e0110 + e0101", 3},
      {10, 9, "e0110 + e0101 + e0011", 6},
      {10, 10, "e1100 + e1010", 3},
      {10, 11, "e1010", 2},
      {10, 12, "e1010 + e0011", 3},
      {10, 13, "e0011", 2},
  };
  return rows;
}

const std::vector<StabilizerRow>& semisimple_stabilizer_rows() {
  static const std::vector<StabilizerRow> rows{
      {"table:semisimple-centralisers#1",
       {"1", {}, {}, 0, [](Params) { return SL2Quad(); }},
       "(J,J,J,J),(-I,-I,I,I),(-I,I,-I,I),(K,K,K,K)"},
      {"table:semisimple-centralisers#2",
       {"(D(a)^-1, D(a)^-1, D(a), D(a))", {"a"}, {true}, 1,
        [](Params p) { return SL2Quad(Dinv(p[0]), Dinv(p[0]), mat::D(p[0]), mat::D(p[0])); }},
       "(-I,-I,I,I),(-I,I,-I,I),(J,J,J,J)"},
      {"table:semisimple-centralisers#3",
       {"(A#, A#, A, A), A in SL(2)", {"a", "b", "c"}, {true, false, false}, 3,
        [](Params p) {
          // A = [[a, b], [c, (1 + b c)/a]]
          Mat2 a{p[0], p[1], p[2], (GR(1) + p[1] * p[2]) / p[0]};
          return SL2Quad(mat::sharp(a), mat::sharp(a), a, a);
        }},
       "(-I,-I,I,I),(-I,I,-I,I)"},
      {"table:semisimple-centralisers#4",
       {"(D(a)^-1, D(a), D(b)^-1, D(b))", {"a", "b"}, {true, true}, 2,
        [](Params p) { return SL2Quad(Dinv(p[0]), mat::D(p[0]), Dinv(p[1]), mat::D(p[1])); }},
       "(-I,I,-I,I),(J,J,J,J)"},
      {"table:semisimple-centralisers#5",
       {"(D(a)^-1, D(b)^-1, D(a), D(b))", {"a", "b"}, {true, true}, 2,
        [](Params p) { return SL2Quad(Dinv(p[0]), Dinv(p[1]), mat::D(p[0]), mat::D(p[1])); }},
       "(-I,-I,I,I),(J,J,J,J)"},
      {"table:semisimple-centralisers#6",
       {"(D(a)^-1, D(b), D(b)^-1, D(a))", {"a", "b"}, {true, true}, 2,
        [](Params p) { return SL2Quad(Dinv(p[0]), mat::D(p[1]), Dinv(p[1]), mat::D(p[0])); }},
       "(-I,I,-I,I),(J,J,J,J)"},
      {"table:semisimple-centralisers#7",
       {"(A#, A, B#, B), A, B in SL(2)", {"a", "b", "c", "d", "e", "f"}, {true, false, false, true, false, false}, 6,
        [](Params p) {
          Mat2 a{p[0], p[1], p[2], (GR(1) + p[1] * p[2]) / p[0]};
          Mat2 b{p[3], p[4], p[5], (GR(1) + p[4] * p[5]) / p[3]};
          return SL2Quad(mat::sharp(a), a, mat::sharp(b), b);
        }},
       "(-I,I,-I,I)"},
      {"table:semisimple-centralisers#8",
       {"(A#, B#, A, B), A, B in SL(2)", {"a", "b", "c", "d", "e", "f"}, {true, false, false, true, false, false}, 6,
        [](Params p) {
          Mat2 a{p[0], p[1], p[2], (GR(1) + p[1] * p[2]) / p[0]};
          Mat2 b{p[3], p[4], p[5], (GR(1) + p[4] * p[5]) / p[3]};
          return SL2Quad(mat::sharp(a), mat::sharp(b), a, b);
        }},
       "(-I,-I,I,I)"},
      {"table:semisimple-centralisers#9",
       {"(A#, B, B#, A), A, B in SL(2)", {"a", "b", "c", "d", "e", "f"}, {true, false, false, true, false, false}, 6,
        [](Params p) {
          Mat2 a{p[0], p[1], p[2], (GR(1) + p[1] * p[2]) / p[0]};
          Mat2 b{p[3], p[4], p[5], (GR(1) + p[4] * p[5]) / p[3]};
          return SL2Quad(mat::sharp(a), b, mat::sharp(b), a);
        }},
       "(-I,I,-I,I)"},
      {"table:semisimple-centralisers#10",
       {"(D(abc)^-1, D(a), D(b), D(c))", {"a", "b", "c"}, {true, true, true}, 3,
        [](Params p) { return SL2Quad(Dinv(p[0] * p[1] * p[2]), mat::D(p[0]), mat::D(p[1]), mat::D(p[2])); }},
       "(J,J,J,J)"},
  };
  return rows;
}

const std::vector<MixedSClassRow>& mixed_s_class_rows() {
  static const std::vector<MixedSClassRow> rows{
      {2, 1, 2,
       {"table:mixed-s-classes#1", {"1", {}, {}, 0, [](Params) { return SL2Quad(); }},
        "(-I,-I,I,I),(-I,I,-I,I),(L,L,L,L)"}},
      {3, 1, 2,
       {"table:mixed-s-classes#2",
        {"(L(a')^T, L(a')^T, L(a'), L(a'))", {"a'"}, {false}, 1,
         [](Params p) { return SL2Quad(tr(mat::L(p[0])), tr(mat::L(p[0])), mat::L(p[0]), mat::L(p[0])); }},
        "(-I,-I,I,I),(-I,I,-I,I),(L,L,L,L)"}},
      {3, 2, 4,
       {"table:mixed-s-classes#3", {"1", {}, {}, 0, [](Params) { return SL2Quad(); }},
        "(-I,-I,I,I),(-I,I,-I,I),(-I,-I,-I,-I)"}},
      {4, 1, 3,
       {"table:mixed-s-classes#4", {"1", {}, {}, 0, [](Params) { return SL2Quad(); }},
        "(-I,-I,I,I),(-I,I,-I,I),(L,L,L,L)"}},
      {4, 3, 2,
       {"table:mixed-s-classes#5",
        {"(D(a)^-1, D(a), D(a)^-1, D(a))", {"a"}, {true}, 1,
         [](Params p) { return SL2Quad(Dinv(p[0]), mat::D(p[0]), Dinv(p[0]), mat::D(p[0])); }},
        "(-I,-I,I,I),(-I,I,-I,I)"}},
      {7, 1, 4,
       {"table:mixed-s-classes#6",
        {"(L(a')^-1, L(a')^-T, L(a')^T, L(a'))", {"a'"}, {false}, 1,
         [](Params p) {
           Mat2 l = mat::L(p[0]);
           return SL2Quad(inv(l), tr(inv(l)), tr(l), l);
         }},
        "(-I,-I,I,I),(-I,I,-I,I),(-I,-I,-I,-I)"}},
      {7, 2, 5,
       {"table:mixed-s-classes#7", {"1", {}, {}, 0, [](Params) { return SL2Quad(); }},
        "(-I,-I,I,I),(-I,I,-I,I),(-I,-I,-I,-I)"}},
      {7, 4, 3,
       {"table:mixed-s-classes#8",
        {"(L(a'), L(a')^T, D(b)^-1, D(b))", {"a'", "b"}, {false, true}, 2,
         [](Params p) { return SL2Quad(mat::L(p[0]), tr(mat::L(p[0])), Dinv(p[1]), mat::D(p[1])); }},
        "(-I,-I,I,I),(-I,I,-I,I),(L,L,J,J)"}},
      {7, 6, 2,
       {"table:mixed-s-classes#9",
        {"(D(a^-1, c'), D(a, c')^T, D(a^-1, b')^T, D(a, b'))", {"a", "b'", "c'"}, {true, false, false}, 3,
         [](Params p) {
           GR ai = p[0].inverse();
           return SL2Quad(mat::D(ai, p[2]), tr(mat::D(p[0], p[2])), tr(mat::D(ai, p[1])), mat::D(p[0], p[1]));
         }},
        "(-I,-I,I,I),(-I,I,-I,I)"}},
      {10, 1, 6,
       {"table:mixed-s-classes#10", {"1", {}, {}, 0, [](Params) { return SL2Quad(); }},
        "(-I,-I,I,I),(-I,I,-I,I),(L,L,L,L)"}},
      {10, 2, 3,
       {"table:mixed-s-classes#11",
        {"(D(a)^-1, D(a)^-1, D(a), D(a))", {"a"}, {true}, 1,
         [](Params p) { return SL2Quad(Dinv(p[0]), Dinv(p[0]), mat::D(p[0]), mat::D(p[0])); }},
        "(-I,-I,I,I),(-I,I,-I,I)"}},
      {10, 5, 2,
       {"table:mixed-s-classes#12",
        {"(D(a)^-1, D(b)^-1, D(b), D(a))", {"a", "b"}, {true, true}, 2,
         [](Params p) { return SL2Quad(Dinv(p[0]), Dinv(p[1]), mat::D(p[1]), mat::D(p[0])); }},
        "(-I,-I,I,I)"}},
  };
  return rows;
}

const std::vector<NilpotentSClassRow>& nilpotent_s_class_rows() {
  static const std::vector<NilpotentSClassRow> rows{
      {2, 1,
       {"table:nilpotent-centralisers#N2",
        {"(D(b^-1 c d, a'), D(b, b'), D(c, c')^T, D(d, d')^T)",
         {"a'", "b'", "c'", "d'", "b", "c", "d"},
         {false, false, false, false, true, true, true},
         7,
         [](Params p) {
           return SL2Quad(mat::D(p[5] * p[6] / p[4], p[0]), mat::D(p[4], p[1]), tr(mat::D(p[5], p[2])),
                          tr(mat::D(p[6], p[3])));
         }},
        ""}},
      {3, 2,
       {"table:nilpotent-centralisers#N3",
        {"(B^-T, B, D(d^-1, c')^T, D(d, d')^T), B in SL(2)",
         {"a", "b", "c", "d", "c'", "d'"},
         {true, false, false, true, false, false},
         6,
         [](Params p) {
           Mat2 b{p[0], p[1], p[2], (GR(1) + p[1] * p[2]) / p[0]};
           return SL2Quad(tr(inv(b)), b, tr(mat::D(p[3].inverse(), p[4])), tr(mat::D(p[3], p[5])));
         }},
        "(-I,I,-I,I)"}},
      {4, 16,
       {"table:nilpotent-centralisers#N4",
        {"(L(b'+c'+d')^-1, L(b'), L(c')^T, L(d')^T)",
         {"b'", "c'", "d'"},
         {false, false, false},
         3,
         [](Params p) {
           return SL2Quad(inv(mat::L(p[0] + p[1] + p[2])), mat::L(p[0]), tr(mat::L(p[1])), tr(mat::L(p[2])));
         }},
        "(-I,-I,I,I),(-I,I,-I,I),(-L,L,L,L)"}},
      {5, 17,
       {"table:nilpotent-centralisers#N5",
        {"(D(b)^-1, D(b), L(d')^-T, L(d')^T)", {"b", "d'"}, {true, false}, 2,
         [](Params p) { return SL2Quad(Dinv(p[0]), mat::D(p[0]), tr(inv(mat::L(p[1]))), tr(mat::L(p[1]))); }},
        "(-I,I,-I,I),(-I,I,I,-I)"}},
      {6, 8,
       {"table:nilpotent-centralisers#N6",
        {"(D(d^-1, -(b'+d')), D(d^-1, b'), D(d^-1, c')^T, D(d, d')^T)",
         {"d", "b'", "c'", "d'"},
         {true, false, false, false},
         4,
         [](Params p) {
           GR di = p[0].inverse();
           return SL2Quad(mat::D(di, -(p[1] + p[3])), mat::D(di, p[1]), tr(mat::D(di, p[2])), tr(mat::D(p[0], p[3])));
         }},
        "(-I,-I,I,I),(-I,I,-I,I)"}},
      {7, 27,
       {"table:nilpotent-centralisers#N7", {"1", {}, {}, 0, [](Params) { return SL2Quad(); }},
        "(-I,-I,I,I),(-I,I,-I,I),(-I,I,I,-I)"}},
      {8, 23,
       {"table:nilpotent-centralisers#N8",
        {"(L(a'), I, L(a')^-T, L(a')^-T)", {"a'"}, {false}, 1,
         [](Params p) {
           Mat2 l = tr(inv(mat::L(p[0])));
           return SL2Quad(mat::L(p[0]), mat::I(), l, l);
         }},
        "(-I,-I,I,I),(-I,I,-I,I),(-I,I,I,-I)"}},
      {9, 12,
       {"table:nilpotent-centralisers#N9",
        // a^2 = 1 + b^2 is parametrised by a = (s + 1/s)/2, b = (s - 1/s)/2;
        // likewise (c, d) by t.
        {"(M(c,d)^-1 M(a,b)^-1, M(c,d), L(u)^T, M(a,b)), a^2 = 1+b^2, c^2 = 1+d^2",
         {"s", "t", "u"},
         {true, true, false},
         3,
         [](Params p) {
           GR half = GR::ratio(1, 2);
           Mat2 ab = mat::M(half * (p[0] + p[0].inverse()), half * (p[0] - p[0].inverse()));
           Mat2 cd = mat::M(half * (p[1] + p[1].inverse()), half * (p[1] - p[1].inverse()));
           return SL2Quad(inv(cd) * inv(ab), cd, tr(mat::L(p[2])), ab);
         }},
        "(-I,I,-I,I),(L,L,L,L)"}},
  };
  return rows;
}

const std::vector<DFamilyRow>& d_family_rows() {
  static const std::vector<DFamilyRow> rows{
      {"table:d-families#D1", "(a+d)/2*u1 + (b-c)/2*u2 + (b+c)/2*u3 + (a-d)/2*u4", "0"},
      {"table:d-families#D2", "(a+c)/2*u1 + (b-c)/2*u2 + (b+c)/2*u3 + (a-c)/2*u4",
       "1/2*i*(u3 + u4 - u2 - u1 + e1110 + e0001 + e1000 + e0111 - e1101 - e0010 - e1011 - e0100)"},
      {"table:d-families#D3", "a/2*u1 + b/2*u2 + b/2*u3 + a/2*u4", "1/2*(u3 - u2 + e0010 + e1101 - e1110 - e0001)"},
      {"table:d-families#D4", "(a+b)/2*u1 + b*u3 + (a-b)/2*u4",
       "i*(e1001 - e0110) + 1/2*(e1101 + e0100 + e1011 + e0010 - e1110 - e0001 - e1000 - e0111)"},
      {"table:d-families#D5", "a*u1 + a*u3", "2*i*(e0001 + e0110 - e1011)"},
      {"table:d-families#D6", "a/2*u1 + a/2*u2 + a/2*u3 + a/2*u4",
       "1/2*(i+1)*(e0010 + e1101 - u2) + 1/2*(i-1)*(e1110 + e0001 - u3) - 1/2*i*(e1011 + e0100 + e1000 + e0111 - u1 - "
       "u4)"},
      {"table:d-families#D7", "0",
       "(e1010 - e1001 + e0011 + e0000) + (i+1)*(e0110 + e0101) - i*(e1011 + e1000 + e0010 - e0001)"},
      {"table:d-families#D8", "0",
       "1/2*(i+1)*u1 - 1/2*(i-1)*u4 + 1/2*(i-1)*(e1110 + e0001) - 1/2*(i+1)*(e1101 + e0010) + 1/2*(e1011 + e0110 + "
       "e0101 + e1000) + 1/2*(1-2*i)*(e0111 + e1010 + e1001 + e0100)"},
      {"table:d-families#D9", "0",
       "1/2*(e1111 + e1100 + e1011 + e1000 + i*e1110 + i*e1101 - i*e1010 + i*e1001) + 1/2*(e0111 + e0100 + e0011 + "
       "e0000 + i*e0110 + i*e0101 - i*e0010 + i*e0001)"},
  };
  return rows;
}

const std::vector<SemisimpleSClassRow>& semisimple_s_class_rows() {
  static const std::vector<SemisimpleSClassRow> rows{
      {1, "P Q^k, P a signed 4x4 permutation matrix, k = 0, 1, 2"},
      {2, "signed 3x3 permutation matrices"},
      {3, "<[[0,1],[1,0]], [[1,1],[0,-1]]> (dihedral of order 12)"},
      {4, "<[[-1,0],[0,1]], [[0,1],[1,0]]> (dihedral of order 8)"},
      {7, "<(-1)>"},
      {10, "<(-1)>"},
  };
  return rows;
}

}  // namespace slocc::data
