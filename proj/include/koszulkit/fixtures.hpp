#pragma once

// Built-in fixtures: presentations paired with an A_0-action and test modules.

#include "koszulkit/action.hpp"
#include "koszulkit/quadratic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koszulkit {

struct Fixture {
    std::string name;
    QuadraticPresentation presentation;
    std::optional<ActionProvider> action;  // absent: A_0 = k acting trivially

    /// The action, or the trivial one on V with the trivial module.
    ActionProvider provider() const;
};

/// A_0 = k acting by the identity on a space of dimension n.
ActionProvider trivial_provider(std::size_t n);

/// kC_2 acting on k[t] by t <| g = -t; modules trivial and sign.
Fixture c2_sign_takiff();
/// sl2 (basis e, h, f) acting on S(sl2) by the adjoint representation;
/// modules trivial and adjoint.
Fixture sl2_adjoint_takiff();
/// Sweedler's Hopf algebra (basis 1, g, x, gx) acting on k<t>/(t t) by
/// t <| g = -t, t <| x = 0; modules trivial and the 2-dimensional module
/// spanned by m and x m.
Fixture sweedler_optional();

/// sym_n, ext_n, free_n, dual_numbers and the named action fixtures.
/// Throws std::invalid_argument on an unknown name.
Fixture builtin_fixture(const std::string& name);
std::vector<std::string> builtin_fixture_names();

} // namespace koszulkit
