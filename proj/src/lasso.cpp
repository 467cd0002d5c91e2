#include "omegadet/lasso.hpp"

#include <stdexcept>

namespace omegadet
{
  namespace
  {
    std::string
    join(const std::vector<SymbolId>& word, const Alphabet& sigma)
    {
      std::string out;
      for (std::size_t i = 0; i < word.size(); ++i)
        {
          if (i)
            out += ",";
          out += word[i] < sigma.size() ? sigma.symbols[word[i]] : "?";
        }
      return out;
    }

    // All words of exactly `length` letters in lexicographic order.
    void
    words_of_length(std::size_t sigma, std::size_t length,
                    std::vector<std::vector<SymbolId>>& out)
    {
      std::vector<SymbolId> w(length, 0);
      for (;;)
        {
          out.push_back(w);
          std::size_t i = length;
          while (i > 0 && w[i - 1] + 1 == sigma)
            w[--i] = 0;
          if (i == 0)
            return;
          ++w[i - 1];
        }
    }

    std::vector<std::vector<SymbolId>>
    words_up_to(std::size_t sigma, std::size_t min_length, std::size_t max_length)
    {
      std::vector<std::vector<SymbolId>> out;
      for (std::size_t len = min_length; len <= max_length; ++len)
        words_of_length(sigma, len, out);
      return out;
    }
  }

  std::string
  to_string(const Lasso& l, const Alphabet& sigma)
  {
    return "prefix=" + join(l.prefix, sigma) + " period=" + join(l.period, sigma);
  }

  std::vector<Lasso>
  enumerate_lassos(const Alphabet& sigma, std::size_t max_prefix, std::size_t max_period)
  {
    if (max_period == 0)
      throw std::invalid_argument("enumerate_lassos: max_period must be at least 1");
    if (sigma.size() == 0)
      return {};
    auto prefixes = words_up_to(sigma.size(), 0, max_prefix);
    auto periods = words_up_to(sigma.size(), 1, max_period);
    std::vector<Lasso> out;
    out.reserve(prefixes.size() * periods.size());
    for (const auto& u : prefixes)
      for (const auto& v : periods)
        out.push_back(Lasso{u, v});
    return out;
  }
}
