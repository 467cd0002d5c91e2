#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace omegadet
{
  using BigCount = boost::multiprecision::cpp_int;

  /// 2 n^n n!
  BigCount compact_buchi_bound(std::size_t n);

  /// 2 n^n (k+1)^{n(k+1)} (n(k+1))!
  BigCount compact_streett_bound(std::size_t n, std::size_t k);

  /// 12^n n^{2n}
  BigCount safra_buchi_bound(std::size_t n);

  /// 12^{n(k+1)} n^n (k+1)^{n(k+1)} (n(k+1))^{n(k+1)}
  BigCount safra_streett_bound(std::size_t n, std::size_t k);
}
