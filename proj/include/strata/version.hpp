#pragma once

namespace strata {

inline constexpr const char* kToolVersion = "0.1.0";

// Recorded in every atlas: fixes the orientation choices that the abstract
// theory leaves open.
inline constexpr const char* kCartanConvention =
    "simple-root basis coordinates; Bourbaki component numbering; "
    "G2 with alpha1 short and alpha2 long; Gram matrices scaled so short "
    "roots of each component have squared length 2";

}  // namespace strata
