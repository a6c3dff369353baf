#pragma once

// Shared deterministic generators for property-style tests.

#include <cstdint>
#include <random>
#include <vector>

#include "indef/exprlang/ast.hpp"

namespace testgen {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
  return (double)(splitmix64(state) >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t& state, double lo, double hi) {
  return lo + (hi - lo) * uniform01(state);
}

/// Random expression tree of depth <= max_depth over the given dims.
inline indef::exprlang::Expr random_expr(std::uint64_t& state, int max_depth,
                                         const indef::exprlang::Dims& dims,
                                         bool transcendentals = true) {
  using namespace indef::exprlang;
  const std::uint64_t pick = splitmix64(state);
  if (max_depth <= 0 || pick % 5 == 0) {
    // leaf
    switch (splitmix64(state) % 6) {
      case 0: return Expr::constant((double)(splitmix64(state) % 1000) / 100.0);
      case 1: return Expr::constant(uniform(state, 0.0, 10.0));
      case 2:
        if (dims.allow_t) return Expr::var_t();
        [[fallthrough]];
      case 3:
        if (dims.n > 0) return Expr::var_x(1 + (int)(splitmix64(state) % dims.n));
        if (dims.allow_t) return Expr::var_t();
        return Expr::constant(1.0);
      case 4:
        if (dims.m > 0) return Expr::var_u(1 + (int)(splitmix64(state) % dims.m));
        if (dims.allow_s) return Expr::var_s();
        return Expr::named(NamedConst::pi);
      default:
        return splitmix64(state) % 2 ? Expr::named(NamedConst::pi)
                                     : Expr::named(NamedConst::e);
    }
  }
  switch (splitmix64(state) % (transcendentals ? 8 : 6)) {
    case 0:
      return Expr::neg(random_expr(state, max_depth - 1, dims, transcendentals));
    case 1:
      return Expr::binary(BinaryOp::add,
                          random_expr(state, max_depth - 1, dims, transcendentals),
                          random_expr(state, max_depth - 1, dims, transcendentals));
    case 2:
      return Expr::binary(BinaryOp::sub,
                          random_expr(state, max_depth - 1, dims, transcendentals),
                          random_expr(state, max_depth - 1, dims, transcendentals));
    case 3:
      return Expr::binary(BinaryOp::mul,
                          random_expr(state, max_depth - 1, dims, transcendentals),
                          random_expr(state, max_depth - 1, dims, transcendentals));
    case 4:
      return Expr::binary(BinaryOp::div,
                          random_expr(state, max_depth - 1, dims, transcendentals),
                          random_expr(state, max_depth - 1, dims, transcendentals));
    case 5: {
      // keep exponents small so values stay finite
      return Expr::binary(BinaryOp::pow,
                          random_expr(state, max_depth - 1, dims, transcendentals),
                          Expr::constant((double)(1 + splitmix64(state) % 3)));
    }
    case 6: {
      Func f = std::vector<Func>{Func::sin, Func::cos, Func::abs,
                                 Func::exp, Func::sqrt}[splitmix64(state) % 5];
      return Expr::call(f, random_expr(state, max_depth - 1, dims, transcendentals));
    }
    default: {
      Func f = splitmix64(state) % 2 ? Func::min : Func::max;
      return Expr::call(f, random_expr(state, max_depth - 1, dims, transcendentals),
                        random_expr(state, max_depth - 1, dims, transcendentals));
    }
  }
}

}  // namespace testgen
