#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kumar/field.hpp"
#include "kumar/monomial.hpp"

namespace kumar {

/// Polynomial ring K[x_0..x_n] with grevlex order. By convention the last
/// variable plays the role of the hyperplane variable unless a pair or
/// triple overrides it.
struct PolyRing {
    std::vector<std::string> vars;
    PrimeField field;

    PolyRing() = default;
    PolyRing(std::vector<std::string> v, PrimeField f) : vars(std::move(v)), field(f) {
        if (vars.empty() || vars.size() > kMaxVars) throw std::invalid_argument("variable count must be 1..8");
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name");
    }

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const PolyRing& o) const { return vars == o.vars && field == o.field; }
};

/// Ring with n variables x0..x{n-1} over the given field.
PolyRing standard_ring(int nvars, const PrimeField& f);

/// The ring obtained by deleting one variable (restriction to a hyperplane).
PolyRing subring_without(const PolyRing& S, int var);

}  // namespace kumar
