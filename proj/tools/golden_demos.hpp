#ifndef MODO_GOLDEN_DEMOS_HPP
#define MODO_GOLDEN_DEMOS_HPP

// Built-in demo fixtures and their golden reports. The configs are the
// same text as the files under configs/; a test keeps them in sync. The
// golden strings are the exact expected output of `modo demo <name>`;
// exact arithmetic makes byte comparison the right acceptance check.

namespace modo::demos {

inline const char* akns_config = R"(field {
  backend = diffpoly;
  vars = u, v;
  rule u'' = -2*u^2*v;
  rule v'' = -2*v^2*u;
}
operator L = i*[[D, u],[v, -D]];
operator B = i*[[-2*D^2 - u*v, -2*u*D - u'],[-2*v*D - v', 2*D^2 + u*v]];
)";

inline const char* ex71_config = R"(field { backend = ratfunc; gen = t; d(t) = 2*i*t; }
let u = 1/t;
let v = 2*t;
operator L = i*[[D, u],[v, -D]];
operator B = i*[[-2*D^2 - u*v, -2*u*D - u'],[-2*v*D - v', 2*D^2 + u*v]];
)";

inline const char* ex72_config = R"(field { backend = ratfunc; gen = x; d(x) = 1; }
let u = x;
let v = 0;
operator L = i*[[D, u],[v, -D]];
operator B = i*[[-2*D^2 - u*v, -2*u*D - u'],[-2*v*D - v', 2*D^2 + u*v]];
)";

} // namespace modo::demos

#endif
