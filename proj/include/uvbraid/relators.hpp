#pragma once

#include <string>
#include <vector>

#include "uvbraid/words.hpp"

namespace uvbraid {

/// One instance of a defining relation lhs = rhs of UV_n(c), with its relator
/// word lhs * rhs^{-1}.
struct Relation {
  std::string family; // PR1, PR2, PR3, CR, MR1, MR2
  std::string id;     // e.g. "MR2[i=1,t=2]"
  UVWord lhs;
  UVWord rhs;

  UVWord relator() const { return lhs * rhs.inverse(); }
};

/// Every instance of (PR1), (PR2), (PR3), (CR), (MR1), (MR2), in that order.
/// (PR2), (CR) and (MR1) range over ordered index pairs with |i - j| >= 2.
std::vector<Relation> defining_relations(const Params &params);

} // namespace uvbraid
