#include <sstream>

#include "compact_common.hpp"

namespace omegadet
{
  unsigned
  priority_of(unsigned e, unsigned f)
  {
    if (e < 2)
      throw std::invalid_argument("priority_of: e = 1 denotes the rejecting sink");
    if (f < 1)
      throw std::invalid_argument("priority_of: f must be positive");
    return f < e ? 2 * f - 2 : 2 * e - 3;
  }

  std::vector<std::uint64_t>
  encode(const CompactTree& t)
  {
    std::vector<std::uint64_t> key;
    key.push_back(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      {
        key.push_back(t.parent[i]);
        key.push_back(t.annotation.empty() ? 0 : t.annotation[i]);
        boost::to_block_range(t.label[i], std::back_inserter(key));
      }
    return key;
  }

  std::string
  to_string(const CompactTree& t)
  {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i)
      {
        if (i)
          os << ' ';
        os << (i + 1) << '^' << t.parent[i] << omegadet::to_string(t.label[i]);
        if (!t.annotation.empty())
          os << 'h' << t.annotation[i];
      }
    return os.str();
  }

  namespace
  {
    const StateSet&
    buchi_set(const Automaton& nbw)
    {
      const auto* acc = std::get_if<BuchiAcceptance>(&nbw.acceptance);
      if (!acc)
        throw std::invalid_argument("compact Safra construction requires Buchi acceptance");
      return acc->accepting;
    }
  }

  CompactTree
  initial_compact_tree(const Automaton& nbw)
  {
    buchi_set(nbw);
    CompactTree t;
    t.parent.push_back(0);
    t.label.push_back(make_state_set(nbw.state_count, {nbw.initial}));
    return t;
  }

  CompactStep
  compact_step(const CompactTree& t, SymbolId a, const Automaton& nbw)
  {
    const StateSet& alpha = buchi_set(nbw);
    const std::size_t n = nbw.state_count;
    const unsigned bound = static_cast<unsigned>(n) + 1;
    detail::WorkTree w(t, bound);
    const unsigned original = w.names_used();

    // successor labels
    for (unsigned v = 1; v <= original; ++v)
      w.label[v] = nbw.post(w.label[v], a);

    // spawn children for accepting states, in name order
    for (unsigned v = 1; v <= original; ++v)
      {
        StateSet acc = w.label[v] & alpha;
        if (acc.any())
          w.add(v, std::move(acc), 0);
      }

    // keep a state only in the smallest-named sibling holding it;
    // parents precede children in name order
    for (unsigned v = 1; v <= w.names_used(); ++v)
      {
        StateSet older(n);
        for (unsigned c : w.children[v])
          {
            StateSet dup = w.label[c] & older;
            older |= w.label[c];
            if (dup.any())
              w.remove_states(c, dup);
          }
      }

    // green nodes lose their descendants
    for (unsigned v = 1; v <= w.names_used(); ++v)
      {
        if (!w.alive[v] || w.live_children(v).empty() || w.label[v].none())
          continue;
        if (w.label[v] == w.children_union(v, n))
          {
            w.drop_descendants(v);
            w.f = std::min(w.f, v);
          }
      }

    // empty nodes
    for (unsigned v = 1; v <= w.names_used(); ++v)
      if (w.alive[v] && w.label[v].none())
        w.drop(v);

    // rename
    return w.finish(false);
  }

  std::vector<std::string>
  check_compact_tree(const CompactTree& t, std::size_t n)
  {
    std::vector<std::string> out;
    if (t.size() == 0)
      return {"tree has no root"};
    if (t.size() > n)
      out.push_back("more than n nodes");
    if (t.parent[0] != 0)
      out.push_back("root has a parent");
    std::vector<StateSet> below(t.size(), StateSet(n));
    for (std::size_t i = 1; i < t.size(); ++i)
      if (t.parent[i] < 1 || t.parent[i] > i)
        out.push_back("parent of " + std::to_string(i + 1) + " is not named below it");
    for (std::size_t i = t.size(); i-- > 1;)
      {
        if (t.parent[i] < 1 || t.parent[i] > i)
          continue;
        auto& sib = below[t.parent[i] - 1];
        if (sib.intersects(t.label[i]))
          out.push_back("siblings under " + std::to_string(t.parent[i]) + " overlap");
        sib |= t.label[i];
      }
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!below[i].is_proper_subset_of(t.label[i]))
        out.push_back("label of " + std::to_string(i + 1)
                      + " is not a proper superset of its children");
    return out;
  }

  ParityConstruction
  explore_nbw_to_dpw(const Automaton& nbw)
  {
    const unsigned index = 2 * static_cast<unsigned>(nbw.state_count);
    return detail::build_dpw(nbw, initial_compact_tree(nbw), index,
                             [&](const CompactTree& t, SymbolId a) {
                               return compact_step(t, a, nbw);
                             });
  }

  Automaton
  nbw_to_dpw(const Automaton& nbw)
  {
    return explore_nbw_to_dpw(nbw).dpw;
  }
}
