#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "adc/complex.hpp"

// Two degree-0 points connected by opposed 1-cells; the smallest complex
// whose basis preorder has a directed cycle.
inline adc::BasedADC two_loop() {
    adc::BasedADC a("two_loop");
    a.add_basis_element("x", 0);
    a.add_basis_element("y", 0);
    a.add_basis_element("a", 1);
    a.add_basis_element("b", 1);
    a.set_augmentation("x", 1);
    a.set_augmentation("y", 1);
    adc::ChainElement da(0), db(0);
    da.add_term(1, 1);
    da.add_term(0, -1);
    db.add_term(0, 1);
    db.add_term(1, -1);
    a.set_differential("a", da);
    a.set_differential("b", db);
    return a;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}
