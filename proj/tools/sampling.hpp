#pragma once

#include <yh/braid.hpp>

#include <random>

namespace yh::cli {

/// A random word with the given kind, strand count and length; framing
/// exponents are drawn from [-d, 2d].
BraidWord random_word(std::mt19937& rng, BraidKind kind, int n, int length, int d);

}  // namespace yh::cli
