#pragma once

#include <string>

#include "fdfa/dfa.hpp"

namespace fdfa::fixtures {

inline Dfa load(const std::string& name) {
  return read_dfa_file(std::string(FDFA_FIXTURE_DIR) + "/" + name + ".dfa").dfa;
}

inline Dfa zstar() { return load("zstar"); }        // 0*      A=0 X=1
inline Dfa onezstar() { return load("onezstar"); }  // 10*     S=0 B=1 X=2
inline Dfa sigplus() { return load("sigplus"); }    // Σ⁺      E=0 P=1
inline Dfa all() { return load("all"); }            // Σ*
inline Dfa empty() { return load("empty"); }        // ∅
inline Dfa odd() { return load("odd"); }
inline Dfa even() { return load("even"); }
inline Dfa single0() { return load("single0"); }    // {0}       q0=0 q"0"=1 sink=2
inline Dfa zero_oneone() { return load("zero_oneone"); }  // {0, 11}

}  // namespace fdfa::fixtures
