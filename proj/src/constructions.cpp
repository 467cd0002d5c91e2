#include "omegadet/constructions.hpp"

#include <stdexcept>

namespace omegadet
{
  Automaton
  nsw_witness_union_nbw(const Automaton& nsw)
  {
    const auto* acc = std::get_if<StreettAcceptance>(&nsw.acceptance);
    if (!acc)
      throw std::invalid_argument("nsw_witness_union_nbw: Streett acceptance required");
    const std::size_t k = acc->pairs.size();
    if (k > max_witness_pairs)
      throw std::invalid_argument("nsw_witness_union_nbw: too many pairs for witness enumeration");

    const std::size_t n = nsw.state_count;
    const std::size_t sigma = nsw.alphabet.size();

    struct Block
    {
      std::vector<std::size_t> order;  // J, descending
      StateSet forbidden;              // ∪ G_j for j ∉ J
      std::size_t base = 0;
    };
    std::vector<Block> blocks;
    std::size_t total = n;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask)
      {
        Block b;
        b.forbidden = StateSet(n);
        for (std::size_t j = k; j-- > 0;)
          {
            if ((mask >> j) & 1u)
              b.order.push_back(j);
            else
              b.forbidden |= acc->pairs[j].guard;
          }
        b.base = total;
        total += n * (b.order.size() + 1);
        blocks.push_back(std::move(b));
      }

    auto id = [&](const Block& b, StateId s, std::size_t i) {
      return static_cast<StateId>(b.base + i * n + s);
    };

    StateSet accepting(total);
    for (const auto& b : blocks)
      for (StateId s = 0; s < n; ++s)
        accepting.set(id(b, s, b.order.size()));

    Automaton out(nsw.alphabet, total, BuchiAcceptance{accepting});
    out.initial = nsw.initial;

    for (StateId s = 0; s < n; ++s)
      for (SymbolId x = 0; x < sigma; ++x)
        for (StateId t : nsw.succ(s, x))
          {
            out.add_edge(s, x, t);
            for (const auto& b : blocks)
              if (!b.forbidden.test(t))
                out.add_edge(s, x, id(b, t, 0));
          }

    for (const auto& b : blocks)
      {
        const std::size_t r = b.order.size();
        for (StateId s = 0; s < n; ++s)
          for (std::size_t i = 0; i <= r; ++i)
            for (SymbolId x = 0; x < sigma; ++x)
              for (StateId t : nsw.succ(s, x))
                {
                  if (b.forbidden.test(t))
                    continue;
                  if (r == 0)
                    {
                      out.add_edge(id(b, s, 0), x, id(b, t, 0));
                      continue;
                    }
                  std::size_t waiting = i == r ? 0 : i;
                  bool hit = acc->pairs[b.order[waiting]].request.test(t);
                  out.add_edge(id(b, s, i), x, id(b, t, hit ? waiting + 1 : waiting));
                }
      }
    return out;
  }

  Automaton
  build_lk_fixture(unsigned k)
  {
    if (k == 0)
      throw std::invalid_argument("build_lk_fixture: k must be positive");
    std::vector<std::string> names;
    for (unsigned x = 1; x <= k; ++x)
      names.push_back(std::to_string(x));

    // State j-1 stands for q_j: q_1 waits; for even i, q_i has committed to
    // minimum i and just read i (accepting), q_{i+1} has committed to i and
    // just read something larger.
    StateSet accepting(k);
    for (unsigned i = 2; i <= k; i += 2)
      accepting.set(i - 1);
    Automaton out(Alphabet::from_symbols(std::move(names)), k, BuchiAcceptance{accepting});
    out.initial = 0;

    auto q = [](unsigned j) { return static_cast<StateId>(j - 1); };
    for (unsigned x = 1; x <= k; ++x)
      {
        out.add_edge(q(1), x - 1, q(1));
        if (x % 2 == 0)
          out.add_edge(q(1), x - 1, q(x));
      }
    for (unsigned i = 2; i <= k; i += 2)
      for (unsigned from : {i, i + 1})
        {
          if (from > k)
            continue;
          for (unsigned x = i; x <= k; ++x)
            out.add_edge(q(from), x - 1, x == i ? q(i) : q(i + 1));
        }
    return out;
  }
}
