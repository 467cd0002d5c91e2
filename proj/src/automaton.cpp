#include "omegadet/automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace omegadet
{
  StateSet
  make_state_set(std::size_t n, std::initializer_list<StateId> init)
  {
    StateSet s(n);
    for (StateId q : init)
      s.set(q);
    return s;
  }

  std::vector<StateId>
  members(const StateSet& set)
  {
    std::vector<StateId> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != StateSet::npos; i = set.find_next(i))
      out.push_back(static_cast<StateId>(i));
    return out;
  }

  std::string
  to_string(const StateSet& set)
  {
    std::string out = "{";
    bool first = true;
    for (StateId q : members(set))
      {
        if (!first)
          out += ",";
        out += std::to_string(q);
        first = false;
      }
    return out + "}";
  }

  std::optional<SymbolId>
  Alphabet::find(const std::string& name) const
  {
    auto it = std::find(symbols.begin(), symbols.end(), name);
    if (it == symbols.end())
      return std::nullopt;
    return static_cast<SymbolId>(it - symbols.begin());
  }

  Alphabet
  Alphabet::from_symbols(std::vector<std::string> names)
  {
    Alphabet sigma;
    sigma.symbols = std::move(names);
    return sigma;
  }

  std::string
  valuation_name(const std::vector<std::string>& aps, SymbolId valuation)
  {
    if (aps.empty())
      return "t";
    std::string out;
    for (std::size_t j = 0; j < aps.size(); ++j)
      {
        if (j)
          out += "&";
        if (!((valuation >> j) & 1u))
          out += "!";
        out += aps[j];
      }
    return out;
  }

  Alphabet
  Alphabet::from_aps(std::vector<std::string> aps)
  {
    if (aps.size() > 16)
      throw std::invalid_argument("too many atomic propositions for an explicit alphabet");
    Alphabet sigma;
    std::size_t count = std::size_t{1} << aps.size();
    for (std::size_t v = 0; v < count; ++v)
      sigma.symbols.push_back(valuation_name(aps, static_cast<SymbolId>(v)));
    sigma.aps = std::move(aps);
    return sigma;
  }

  std::string
  acceptance_name(const Acceptance& acc)
  {
    struct
    {
      std::string operator()(const BuchiAcceptance&) const { return "Buchi"; }
      std::string operator()(const RabinAcceptance& r) const
      {
        return "Rabin " + std::to_string(r.pairs.size());
      }
      std::string operator()(const StreettAcceptance& s) const
      {
        return "Streett " + std::to_string(s.pairs.size());
      }
      std::string operator()(const ParityAcceptance& p) const
      {
        return "parity min even " + std::to_string(p.index);
      }
    } visitor;
    return std::visit(visitor, acc);
  }

  bool
  accepts_inf_set(const Acceptance& acc, const StateSet& inf)
  {
    if (auto* b = std::get_if<BuchiAcceptance>(&acc))
      return b->accepting.intersects(inf);
    if (auto* r = std::get_if<RabinAcceptance>(&acc))
      return std::any_of(r->pairs.begin(), r->pairs.end(), [&](const RabinPair& p) {
        return !p.fin.intersects(inf) && p.inf.intersects(inf);
      });
    if (auto* s = std::get_if<StreettAcceptance>(&acc))
      return std::all_of(s->pairs.begin(), s->pairs.end(), [&](const StreettPair& p) {
        return !p.guard.intersects(inf) || p.request.intersects(inf);
      });
    const auto& p = std::get<ParityAcceptance>(acc);
    unsigned best = p.index;
    for (StateId q : members(inf))
      best = std::min(best, p.priority[q]);
    return best < p.index && best % 2 == 0;
  }

  Automaton::Automaton(Alphabet sigma, std::size_t n, Acceptance acc, bool det)
    : alphabet(std::move(sigma)), state_count(n),
      successors(n * alphabet.size()), acceptance(std::move(acc)), deterministic(det)
  {
  }

  void
  Automaton::add_edge(StateId from, SymbolId a, StateId to)
  {
    auto& dst = successors.at(from * alphabet.size() + a);
    auto it = std::lower_bound(dst.begin(), dst.end(), to);
    if (it == dst.end() || *it != to)
      dst.insert(it, to);
  }

  StateSet
  Automaton::post(const StateSet& from, SymbolId a) const
  {
    StateSet out(state_count);
    for (auto i = from.find_first(); i != StateSet::npos; i = from.find_next(i))
      for (StateId t : succ(static_cast<StateId>(i), a))
        out.set(t);
    return out;
  }

  bool
  Automaton::is_complete() const
  {
    return std::none_of(successors.begin(), successors.end(),
                        [](const auto& v) { return v.empty(); });
  }

  std::size_t
  Automaton::edge_count() const
  {
    std::size_t total = 0;
    for (const auto& v : successors)
      total += v.size();
    return total;
  }

  std::string
  to_string(const Diagnostic& d)
  {
    std::ostringstream os;
    os << d.message;
    if (d.state)
      os << " (state " << *d.state;
    if (d.symbol)
      os << (d.state ? ", " : " (") << "symbol " << *d.symbol;
    if (d.state || d.symbol)
      os << ")";
    return os.str();
  }

  namespace
  {
    void
    check_set(std::vector<Diagnostic>& out, const StateSet& s, std::size_t n,
              const std::string& what)
    {
      if (s.size() != n)
        out.push_back({what + " is not sized to the state count", {}, {}});
    }
  }

  std::vector<Diagnostic>
  validate_automaton(const Automaton& a)
  {
    std::vector<Diagnostic> out;
    const auto& sigma = a.alphabet;
    if (sigma.symbols.empty())
      out.push_back({"alphabet is empty", {}, {}});
    {
      std::set<std::string> seen;
      for (SymbolId i = 0; i < sigma.size(); ++i)
        if (!seen.insert(sigma.symbols[i]).second)
          out.push_back({"duplicate symbol '" + sigma.symbols[i] + "'", {}, i});
    }
    if (!sigma.aps.empty() && sigma.size() != (std::size_t{1} << sigma.aps.size()))
      out.push_back({"alphabet size does not match 2^|AP|", {}, {}});
    if (a.state_count == 0)
      out.push_back({"automaton has no states", {}, {}});
    else if (a.initial >= a.state_count)
      out.push_back({"initial state out of range", a.initial, {}});

    if (a.successors.size() != a.state_count * sigma.size())
      {
        out.push_back({"transition table has wrong shape", {}, {}});
        return out;
      }
    for (StateId s = 0; s < a.state_count; ++s)
      for (SymbolId x = 0; x < sigma.size(); ++x)
        {
          const auto& dst = a.succ(s, x);
          for (StateId t : dst)
            if (t >= a.state_count)
              out.push_back({"target out of range", s, x});
          if (!std::is_sorted(dst.begin(), dst.end())
              || std::adjacent_find(dst.begin(), dst.end()) != dst.end())
            out.push_back({"successor set not sorted and unique", s, x});
          if (a.deterministic && dst.size() != 1)
            out.push_back({"determinism violated", s, x});
        }

    const std::size_t n = a.state_count;
    if (auto* b = std::get_if<BuchiAcceptance>(&a.acceptance))
      check_set(out, b->accepting, n, "Buchi set");
    else if (auto* r = std::get_if<RabinAcceptance>(&a.acceptance))
      for (std::size_t i = 0; i < r->pairs.size(); ++i)
        {
          check_set(out, r->pairs[i].fin, n, "Rabin pair " + std::to_string(i) + " fin");
          check_set(out, r->pairs[i].inf, n, "Rabin pair " + std::to_string(i) + " inf");
        }
    else if (auto* st = std::get_if<StreettAcceptance>(&a.acceptance))
      for (std::size_t i = 0; i < st->pairs.size(); ++i)
        {
          check_set(out, st->pairs[i].request, n,
                    "Streett pair " + std::to_string(i) + " request");
          check_set(out, st->pairs[i].guard, n, "Streett pair " + std::to_string(i) + " guard");
        }
    else
      {
        const auto& p = std::get<ParityAcceptance>(a.acceptance);
        if (p.index == 0)
          out.push_back({"parity index must be positive", {}, {}});
        if (p.priority.size() != n)
          out.push_back({"priority table has wrong size", {}, {}});
        else
          for (StateId s = 0; s < n; ++s)
            if (p.priority[s] >= p.index)
              out.push_back({"priority out of range", s, {}});
      }
    return out;
  }

  namespace
  {
    void
    require_deterministic_parity(const Automaton& d, const char* what)
    {
      if (!has_acceptance<ParityAcceptance>(d))
        throw std::invalid_argument(std::string(what) + ": parity acceptance required");
      if (!d.deterministic)
        throw std::invalid_argument(std::string(what) + ": deterministic automaton required");
    }
  }

  Automaton
  dualize_parity(const Automaton& d)
  {
    require_deterministic_parity(d, "dualize_parity");
    if (!d.is_complete())
      throw std::invalid_argument("dualize_parity: automaton is not complete");
    Automaton out = d;
    auto& p = std::get<ParityAcceptance>(out.acceptance);
    for (auto& prio : p.priority)
      ++prio;
    ++p.index;
    return out;
  }

  Automaton
  normalize_parity(const Automaton& d)
  {
    require_deterministic_parity(d, "normalize_parity");
    Automaton out = d;
    auto& p = std::get<ParityAcceptance>(out.acceptance);
    if (p.priority.empty())
      return out;
    unsigned low = *std::min_element(p.priority.begin(), p.priority.end());
    unsigned shift = low - low % 2;
    for (auto& prio : p.priority)
      prio -= shift;
    p.index -= shift;
    return out;
  }

  namespace
  {
    StateSet
    permute(const StateSet& s, const std::vector<StateId>& to_new)
    {
      StateSet out(s.size());
      for (StateId q : members(s))
        out.set(to_new[q]);
      return out;
    }
  }

  Automaton
  canonical_numbering(const Automaton& a)
  {
    const std::size_t n = a.state_count;
    constexpr StateId unset = ~StateId{0};
    std::vector<StateId> to_new(n, unset);
    std::vector<StateId> order;
    order.reserve(n);
    std::deque<StateId> queue;
    if (n)
      {
        to_new[a.initial] = 0;
        order.push_back(a.initial);
        queue.push_back(a.initial);
      }
    while (!queue.empty())
      {
        StateId s = queue.front();
        queue.pop_front();
        for (SymbolId x = 0; x < a.alphabet.size(); ++x)
          for (StateId t : a.succ(s, x))
            if (to_new[t] == unset)
              {
                to_new[t] = static_cast<StateId>(order.size());
                order.push_back(t);
                queue.push_back(t);
              }
      }
    for (StateId s = 0; s < n; ++s)
      if (to_new[s] == unset)
        {
          to_new[s] = static_cast<StateId>(order.size());
          order.push_back(s);
        }

    Automaton out(a.alphabet, n, a.acceptance, a.deterministic);
    out.initial = n ? 0 : a.initial;
    for (StateId s = 0; s < n; ++s)
      for (SymbolId x = 0; x < a.alphabet.size(); ++x)
        for (StateId t : a.succ(s, x))
          out.add_edge(to_new[s], x, to_new[t]);

    struct
    {
      const std::vector<StateId>& to_new;
      void operator()(BuchiAcceptance& b) const { b.accepting = permute(b.accepting, to_new); }
      void operator()(RabinAcceptance& r) const
      {
        for (auto& p : r.pairs)
          {
            p.fin = permute(p.fin, to_new);
            p.inf = permute(p.inf, to_new);
          }
      }
      void operator()(StreettAcceptance& st) const
      {
        for (auto& p : st.pairs)
          {
            p.request = permute(p.request, to_new);
            p.guard = permute(p.guard, to_new);
          }
      }
      void operator()(ParityAcceptance& p) const
      {
        std::vector<unsigned> prio(p.priority.size());
        for (std::size_t s = 0; s < p.priority.size(); ++s)
          prio[to_new[s]] = p.priority[s];
        p.priority = std::move(prio);
      }
    } remap{to_new};
    std::visit(remap, out.acceptance);
    return out;
  }

  bool
  isomorphic(const Automaton& a, const Automaton& b)
  {
    if (a.alphabet.symbols != b.alphabet.symbols || a.state_count != b.state_count)
      return false;
    Automaton ca = canonical_numbering(a);
    Automaton cb = canonical_numbering(b);
    return ca.successors == cb.successors && ca.initial == cb.initial
      && ca.acceptance == cb.acceptance && ca.deterministic == cb.deterministic;
  }
}
