#include "omegadet/bounds.hpp"

namespace omegadet
{
  namespace
  {
    BigCount
    power(std::size_t base, std::size_t exp)
    {
      return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
    }

    BigCount
    factorial(std::size_t n)
    {
      BigCount r = 1;
      for (std::size_t i = 2; i <= n; ++i)
        r *= i;
      return r;
    }
  }

  BigCount
  compact_buchi_bound(std::size_t n)
  {
    return 2 * power(n, n) * factorial(n);
  }

  BigCount
  compact_streett_bound(std::size_t n, std::size_t k)
  {
    const std::size_t m = n * (k + 1);
    return 2 * power(n, n) * power(k + 1, m) * factorial(m);
  }

  BigCount
  safra_buchi_bound(std::size_t n)
  {
    return power(12, n) * power(n, 2 * n);
  }

  BigCount
  safra_streett_bound(std::size_t n, std::size_t k)
  {
    const std::size_t m = n * (k + 1);
    return power(12, m) * power(n, n) * power(k + 1, m) * power(m, m);
  }
}
