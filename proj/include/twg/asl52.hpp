// The ASL(5,2) counterpoint: the hypothesis fails there, witnessed by
//   * Z(Q_x) = 1 for the stabilizer Q_x = 2^4 : SL(4,2) of a nonzero vector,
//   * Hom_{SL(5,2)}(V_5, W_124) = 0 for the module W induced from the natural
//     module of the Levi quotient SL(4,2) of Q_x,
// so no equivariant copy of the natural module embeds into W.
#pragma once

#include <cstdint>
#include <string>

namespace twg {

struct Asl52Report {
  std::uint64_t group_order = 0;   // want 9999360
  int dim_w = 0;                   // want 124
  int hom_dim = -1;                // want 0
  bool centre_trivial = false;     // Z(Q_x) = 1
  std::string stage;               // last stage reached (for diagnostics)
  bool pass() const {
    return group_order == 9999360 && dim_w == 124 && hom_dim == 0 &&
           centre_trivial;
  }
};

Asl52Report run_remark_asl52();

}  // namespace twg
