#include "invariant_data.hpp"

namespace slocc::data {

// Monomial lists of the generating invariants H, L, M, D: "i.j.k" stands for
// x_i x_j x_k with x_k the amplitude of b_k, and a leading "-" negates the term.

// Row anchors: table:invariants#H, #L, #M, #D.
const std::array<InvariantRecord, 4>& invariant_records() {
  static const std::array<InvariantRecord, 4> records{{
      {"H", 2, 8, 0xa92871af97ca6ebcULL,
       "-8.9,7.10,6.11,-5.12,4.13,-3.14,-2.15,1.16"},
      {"L", 4, 24, 0x8e5b15baa71ddf95ULL,
       "4.7.10.13,-4.7.9.14,-4.6.11.13,4.6.9.15,4.5.11.14,-4.5.10.15,-3.8.10.13,3.8.9.14,3.6.12.13,"
       "-3.6.9.16,-3.5.12.14,3.5.10.16,2.8.11.13,-2.8.9.15,-2.7.12.13,2.7.9.16,2.5.12.15,-2.5.11.16,"
       "-1.8.11.14,1.8.10.15,1.7.12.14,-1.7.10.16,-1.6.12.15,1.6.11.16"},
      {"M", 4, 24, 0x55ed238c321c39fdULL,
       "-6.7.10.11,6.7.9.12,5.8.10.11,-5.8.9.12,4.6.11.13,-4.6.9.15,-4.5.11.14,4.5.9.16,-3.6.12.13,"
       "3.6.10.15,3.5.12.14,-3.5.10.16,-2.8.11.13,2.8.9.15,2.7.11.14,-2.7.9.16,-2.3.14.15,2.3.13.16,"
       "1.8.12.13,-1.8.10.15,-1.7.12.14,1.7.10.16,1.4.14.15,-1.4.13.16"},
      {"D", 6, 144, 0xcf11b079af33fc29ULL,
       "-4.6.8.9.11.13,4.6.8.9.9.15,-4.6.7.10.11.13,4.6.7.9.12.13,4.6.7.9.11.14,-4.6.7.9.9.16,"
       "4.6.6.11.11.13,-4.6.6.9.11.15,4.5.8.10.11.13,-4.5.8.9.10.15,-4.5.7.9.12.14,4.5.7.9.10.16,"
       "-4.5.6.11.12.13,-4.5.6.11.11.14,4.5.6.10.11.15,4.5.6.9.11.16,4.5.5.11.12.14,-4.5.5.10.11.16,"
       "4.4.6.11.13.13,-4.4.6.9.13.15,-4.4.5.11.13.14,4.4.5.9.14.15,3.6.8.10.11.13,-3.6.8.9.10.15,"
       "-3.6.7.9.12.14,3.6.7.9.10.16,-3.6.6.11.12.13,3.6.6.9.12.15,-3.5.8.10.12.13,-3.5.8.10.11.14,"
       "3.5.8.10.10.15,3.5.8.9.12.14,3.5.7.10.12.14,-3.5.7.10.10.16,3.5.6.12.12.13,3.5.6.11.12.14,"
       "-3.5.6.10.12.15,-3.5.6.9.12.16,-3.5.5.12.12.14,3.5.5.10.12.16,-3.4.6.12.13.13,-3.4.6.11.13.14,"
       "3.4.6.10.13.15,3.4.6.9.13.16,3.4.5.12.13.14,3.4.5.11.14.14,-3.4.5.10.14.15,-3.4.5.9.14.16,"
       "3.3.6.12.13.14,-3.3.6.10.13.16,-3.3.5.12.14.14,3.3.5.10.14.16,2.8.8.9.11.13,-2.8.8.9.9.15,"
       "-2.7.8.9.12.13,-2.7.8.9.11.14,2.7.8.9.10.15,2.7.8.9.9.16,2.7.7.9.12.14,-2.7.7.9.10.16,"
       "-2.6.8.11.11.13,2.6.8.9.11.15,2.6.7.11.12.13,-2.6.7.9.12.15,2.5.8.11.11.14,-2.5.8.10.11.15,"
       "2.5.8.9.12.15,-2.5.8.9.11.16,-2.5.7.11.12.14,2.5.7.10.11.16,-2.4.8.11.13.13,2.4.8.9.13.15,"
       "2.4.7.11.13.14,-2.4.7.9.14.15,-2.4.6.11.13.15,2.4.6.9.15.15,2.4.5.11.13.16,-2.4.5.9.15.16,"
       "2.3.8.12.13.13,-2.3.8.10.13.15,2.3.8.9.14.15,-2.3.8.9.13.16,-2.3.7.12.13.14,2.3.7.10.13.16,"
       "2.3.6.11.13.16,-2.3.6.9.15.16,2.3.5.12.14.15,-2.3.5.12.13.16,-2.3.5.11.14.16,2.3.5.9.16.16,"
       "2.2.8.11.13.15,-2.2.8.9.15.15,-2.2.7.11.13.16,2.2.7.9.15.16,-1.8.8.10.11.13,1.8.8.9.10.15,"
       "1.7.8.10.12.13,1.7.8.10.11.14,-1.7.8.10.10.15,-1.7.8.9.10.16,-1.7.7.10.12.14,1.7.7.10.10.16,"
       "1.6.8.11.12.13,-1.6.8.9.12.15,-1.6.7.12.12.13,1.6.7.10.12.15,-1.6.7.10.11.16,1.6.7.9.12.16,"
       "-1.5.8.11.12.14,1.5.8.10.11.16,1.5.7.12.12.14,-1.5.7.10.12.16,1.4.8.11.13.14,-1.4.8.9.14.15,"
       "-1.4.7.11.14.14,1.4.7.10.14.15,-1.4.7.10.13.16,1.4.7.9.14.16,1.4.6.12.13.15,1.4.6.11.14.15,"
       "-1.4.6.11.13.16,-1.4.6.10.15.15,-1.4.5.12.14.15,1.4.5.10.15.16,-1.3.8.12.13.14,1.3.8.10.13.16,"
       "1.3.7.12.14.14,-1.3.7.10.14.16,-1.3.6.12.14.15,1.3.6.10.15.16,1.3.5.12.14.16,-1.3.5.10.16.16,"
       "-1.2.8.12.13.15,-1.2.8.11.14.15,1.2.8.10.15.15,1.2.8.9.15.16,1.2.7.12.13.16,1.2.7.11.14.16,"
       "-1.2.7.10.15.16,-1.2.7.9.16.16,1.1.8.12.14.15,-1.1.8.10.15.16,-1.1.7.12.14.16,1.1.7.10.16.16"},
  }};
  return records;
}

// Row anchors: table:semisimple-invariants#1..#10.
const std::array<std::array<const char*, 4>, 11>& family_value_rows() {
  static const std::array<std::array<const char*, 4>, 11> rows{{
      {nullptr, nullptr, nullptr, nullptr},
      {"l1^2+l2^2+l3^2+l4^2",
       "-l1^2*l2^2+l1^2*l3^2+l2^2*l4^2-l3^2*l4^2",
       "l1^2*l2^2-l1^2*l4^2-l2^2*l3^2+l3^2*l4^2",
       "l1^4*l2^2+l1^2*l2^4-l1^2*l2^2*l3^2-l1^2*l2^2*l4^2-l1^2*l3^2*l4^2-l2^2*l3^2*l4^2+l3^4*l4^2+l3^2*l4^4"},
      {"l1^2+l2^2+l3^2", "-l1^2*l2^2+l1^2*l3^2", "l1^2*l2^2-l2^2*l3^2", "l1^4*l2^2+l1^2*l2^4-l1^2*l2^2*l3^2"},
      {"2*l1^2+2*l1*l2+2*l2^2", "-l1^4-2*l1^3*l2+2*l1*l2^3+l2^4", "l1^4+2*l1^3*l2",
       "2*l1^6+6*l1^5*l2+6*l1^4*l2^2+2*l1^3*l2^3"},
      {"l1^2+l2^2", "0", "-l1^2*l2^2", "0"},
      {"l1^2+l2^2", "l1^2*l2^2", "0", "0"},
      {"l1^2+l2^2", "-l1^2*l2^2", "l1^2*l2^2", "l1^4*l2^2+l1^2*l2^4"},
      {"2*l1^2", "0", "-l1^4", "0"},
      {"2*l1^2", "l1^4", "0", "0"},
      {"2*l1^2", "-l1^4", "l1^4", "2*l1^6"},
      {"l1^2", "0", "0", "0"},
  }};
  return rows;
}

// Row anchors: table:invariant-relations#2..#10.
const std::array<std::vector<const char*>, 11>& relation_rows() {
  static const std::array<std::vector<const char*>, 11> rows{{
      {},
      {},
      {"H^5*L*M*D-H^4*L^2*M^2-H^4*L*D^2+H^4*M*D^2-8*H^3*L^2*M*D+8*H^3*L*M^2*D+8*H^2*L^3*M^2-8*H^2*L^2*M^3"
       "-H^3*D^3+8*H^2*L^2*D^2-46*H^2*L*M*D^2+8*H^2*M^2*D^2+16*H*L^3*M*D+64*H*L^2*M^2*D+16*H*L*M^3*D-16*L^4*M^2"
       "-32*L^3*M^3-16*L^2*M^4+36*H*L*D^3-36*H*M*D^3-16*L^3*D^2-24*L^2*M*D^2+24*L*M^2*D^2+16*M^3*D^2+27*D^4"},
      {"H^3*D-2*H^2*L*M-4*H*L*D+4*H*M*D+8*L^2*M-8*L*M^2-18*D^2",
       "H^4-8*H^2*L+8*H^2*M-24*H*D+16*L^2+16*L*M+16*M^2"},
      {"D", "L"},
      {"D", "M"},
      {"L+M", "H*M-D"},
      {"D", "L", "H^2+4*M"},
      {"D", "M", "H^2-4*L"},
      {"M^3-1/4*D^2", "L+M", "H*D-4*M^2", "H*M-D", "H^2-4*M"},
      {"D", "M", "L"},
  }};
  return rows;
}

}  // namespace slocc::data
