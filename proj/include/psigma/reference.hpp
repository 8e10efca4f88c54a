#pragma once

// Slow, definition-level oracles. They share no algorithmic code with the fast paths they
// are compared against beyond validate_hypertree and leq.

#include "psigma/hypertree.hpp"
#include "psigma/stabilizer.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace psigma::reference {

/// Every edge set on [n] that passes validate_hypertree, found by searching all families of
/// candidate edges with pairwise intersections of size <= 1. Sorted canonically.
std::vector<Hypertree> brute_force_hypertrees(int n);

/// The element of `all` below a and b that lies above every other common lower bound.
std::optional<Hypertree> brute_force_meet(const std::vector<Hypertree>& all, const Hypertree& a, const Hypertree& b);

/// The element of `all` stabilized by A that lies below every other such element.
std::optional<Hypertree> brute_force_cone_point(const std::vector<Hypertree>& all, const GeneratorSet& A);

/// The three-condition definition: at most one fat edge, and such an edge contains 1 and
/// lies on the reduced path from 1 to 2.
bool essential_by_conditions(const Hypertree& t);

/// Number of ordered index tuples for [a_ij,a_kl], [a_ij,a_kj] and [a_ij,a_ik a_jk].
std::size_t mccool_instance_count(int n);

} // namespace psigma::reference
