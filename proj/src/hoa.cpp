#include "omegadet/hoa.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace omegadet
{
  namespace
  {
    // Acceptance formulas, with nested conjunctions and disjunctions
    // flattened so that equivalent bracketings compare equal.
    struct Formula
    {
      enum class Kind { True, False, Inf, Fin, And, Or } kind = Kind::True;
      unsigned set = 0;
      std::vector<Formula> kids;

      bool operator==(const Formula&) const = default;

      static Formula inf(unsigned s) { return {Kind::Inf, s, {}}; }
      static Formula fin(unsigned s) { return {Kind::Fin, s, {}}; }
      static Formula join(Kind k, std::vector<Formula> parts)
      {
        Formula out{k, 0, {}};
        for (auto& p : parts)
          {
            if (p.kind == k)
              for (auto& q : p.kids)
                out.kids.push_back(std::move(q));
            else
              out.kids.push_back(std::move(p));
          }
        if (out.kids.size() == 1)
          return std::move(out.kids.front());
        return out;
      }
    };

    std::string
    render(const Formula& f)
    {
      switch (f.kind)
        {
        case Formula::Kind::True:
          return "t";
        case Formula::Kind::False:
          return "f";
        case Formula::Kind::Inf:
          return "Inf(" + std::to_string(f.set) + ")";
        case Formula::Kind::Fin:
          return "Fin(" + std::to_string(f.set) + ")";
        default:
          break;
        }
      std::string out;
      const char* sep = f.kind == Formula::Kind::And ? " & " : " | ";
      for (std::size_t i = 0; i < f.kids.size(); ++i)
        {
          if (i)
            out += sep;
          const auto& k = f.kids[i];
          bool compound = k.kind == Formula::Kind::And || k.kind == Formula::Kind::Or;
          out += compound ? "(" + render(k) + ")" : render(k);
        }
      return out;
    }

    Formula
    parity_formula(unsigned from, unsigned index)
    {
      bool even = from % 2 == 0;
      Formula here = even ? Formula::inf(from) : Formula::fin(from);
      if (from + 1 == index)
        return here;
      return Formula::join(even ? Formula::Kind::Or : Formula::Kind::And,
                           {here, parity_formula(from + 1, index)});
    }

    struct AccShape
    {
      unsigned sets;
      Formula formula;
    };

    AccShape
    shape_of(const Acceptance& acc)
    {
      if (std::holds_alternative<BuchiAcceptance>(acc))
        return {1, Formula::inf(0)};
      if (auto* r = std::get_if<RabinAcceptance>(&acc))
        {
          unsigned k = static_cast<unsigned>(r->pairs.size());
          if (k == 0)
            return {0, {Formula::Kind::False, 0, {}}};
          std::vector<Formula> parts;
          for (unsigned i = 0; i < k; ++i)
            parts.push_back(
              Formula::join(Formula::Kind::And, {Formula::fin(2 * i), Formula::inf(2 * i + 1)}));
          return {2 * k, Formula::join(Formula::Kind::Or, std::move(parts))};
        }
      if (auto* s = std::get_if<StreettAcceptance>(&acc))
        {
          unsigned k = static_cast<unsigned>(s->pairs.size());
          if (k == 0)
            return {0, {Formula::Kind::True, 0, {}}};
          std::vector<Formula> parts;
          for (unsigned i = 0; i < k; ++i)
            parts.push_back(
              Formula::join(Formula::Kind::Or, {Formula::fin(2 * i), Formula::inf(2 * i + 1)}));
          return {2 * k, Formula::join(Formula::Kind::And, std::move(parts))};
        }
      const auto& p = std::get<ParityAcceptance>(acc);
      return {p.index, parity_formula(0, p.index)};
    }

    std::string
    quote(const std::string& s)
    {
      std::string out = "\"";
      for (char c : s)
        {
          if (c == '"' || c == '\\')
            out += '\\';
          out += c;
        }
      return out + "\"";
    }

    // ---------------------------------------------------------------- lexer

    struct Token
    {
      enum class Kind { Header, Ident, Int, String, Punct, Body, End, Abort, Alias, Eof } kind;
      std::string text;
      std::size_t line = 0;
      std::size_t column = 0;
    };

    class Lexer
    {
    public:
      explicit Lexer(std::string_view text) : text_(text) {}

      std::vector<Token> run()
      {
        std::vector<Token> out;
        for (;;)
          {
            skip_space();
            Token tok{Token::Kind::Eof, "", line_, column_};
            if (pos_ >= text_.size())
              {
                out.push_back(tok);
                return out;
              }
            char c = text_[pos_];
            if (c == '"')
              {
                tok.kind = Token::Kind::String;
                tok.text = read_string();
              }
            else if (std::isdigit(static_cast<unsigned char>(c)))
              {
                tok.kind = Token::Kind::Int;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                  tok.text += advance();
              }
            else if (c == '-' && text_.substr(pos_, 2) == "--")
              {
                std::string word;
                while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
                  word += advance();
                if (word == "--BODY--")
                  tok.kind = Token::Kind::Body;
                else if (word == "--END--")
                  tok.kind = Token::Kind::End;
                else if (word == "--ABORT--")
                  tok.kind = Token::Kind::Abort;
                else
                  throw HoaError("unexpected '" + word + "'", tok.line, tok.column);
                tok.text = word;
              }
            else if (c == '@')
              {
                advance();
                tok.kind = Token::Kind::Alias;
                tok.text = read_ident();
              }
            else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
              {
                tok.text = read_ident();
                if (pos_ < text_.size() && text_[pos_] == ':')
                  {
                    advance();
                    tok.kind = Token::Kind::Header;
                  }
                else
                  tok.kind = Token::Kind::Ident;
              }
            else if (std::string_view("()[]{}&|!").find(c) != std::string_view::npos)
              {
                tok.kind = Token::Kind::Punct;
                tok.text = std::string(1, advance());
              }
            else
              throw HoaError(std::string("unexpected character '") + c + "'", line_, column_);
            out.push_back(std::move(tok));
          }
      }

    private:
      char advance()
      {
        char c = text_[pos_++];
        if (c == '\n')
          {
            ++line_;
            column_ = 1;
          }
        else
          ++column_;
        return c;
      }

      void skip_space()
      {
        while (pos_ < text_.size())
          {
            if (std::isspace(static_cast<unsigned char>(text_[pos_])))
              advance();
            else if (text_.substr(pos_, 2) == "/*")
              {
                std::size_t l = line_, col = column_;
                advance();
                advance();
                while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/")
                  advance();
                if (pos_ >= text_.size())
                  throw HoaError("unterminated comment", l, col);
                advance();
                advance();
              }
            else
              break;
          }
      }

      std::string read_ident()
      {
        std::string out;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'
                   || text_[pos_] == '-'))
          out += advance();
        return out;
      }

      std::string read_string()
      {
        std::size_t l = line_, col = column_;
        advance();
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"')
          {
            if (text_[pos_] == '\\')
              {
                advance();
                if (pos_ >= text_.size())
                  break;
              }
            out += advance();
          }
        if (pos_ >= text_.size())
          throw HoaError("unterminated string", l, col);
        advance();
        return out;
      }

      std::string_view text_;
      std::size_t pos_ = 0;
      std::size_t line_ = 1;
      std::size_t column_ = 1;
    };

    // --------------------------------------------------------------- parser

    class Parser
    {
    public:
      explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

      Automaton parse()
      {
        header();
        body();
        return build();
      }

    private:
      const Token& peek() const { return toks_[pos_]; }
      const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

      [[noreturn]] void fail(const std::string& what, const Token& at) const
      {
        throw HoaError(what, at.line, at.column);
      }

      bool is_punct(const char* p) const
      {
        return peek().kind == Token::Kind::Punct && peek().text == p;
      }

      void expect_punct(const char* p)
      {
        if (!is_punct(p))
          fail(std::string("expected '") + p + "'", peek());
        next();
      }

      unsigned expect_int(const char* what)
      {
        const Token& t = peek();
        if (t.kind != Token::Kind::Int)
          fail(std::string("expected ") + what, t);
        next();
        try
          {
            return static_cast<unsigned>(std::stoul(t.text));
          }
        catch (const std::exception&)
          {
            fail("integer out of range", t);
          }
      }

      std::string expect_string(const char* what)
      {
        if (peek().kind != Token::Kind::String)
          fail(std::string("expected ") + what, peek());
        return next().text;
      }

      bool at_header_end() const
      {
        auto k = peek().kind;
        return k == Token::Kind::Header || k == Token::Kind::Body || k == Token::Kind::Eof;
      }

      void header()
      {
        if (peek().kind != Token::Kind::Header || peek().text != "HOA")
          fail("document must start with 'HOA:'", peek());
        next();
        if (peek().kind != Token::Kind::Ident || peek().text != "v1")
          fail("only HOA v1 is supported", peek());
        next();

        while (peek().kind == Token::Kind::Header)
          {
            const Token head = next();
            const std::string& name = head.text;
            if (name == "States")
              states_ = expect_int("state count");
            else if (name == "Start")
              {
                if (start_)
                  fail("multiple Start headers are unsupported", head);
                start_ = expect_int("start state");
                start_tok_ = head;
                if (is_punct("&"))
                  fail("conjunctive start states are unsupported", peek());
              }
            else if (name == "AP")
              {
                unsigned count = expect_int("AP count");
                for (unsigned i = 0; i < count; ++i)
                  aps_.push_back(expect_string("AP name"));
                ap_tok_ = head;
              }
            else if (name == "acc-name")
              {
                acc_tok_ = head;
                while (!at_header_end())
                  acc_name_.push_back(next().text);
              }
            else if (name == "Acceptance")
              {
                accept_tok_ = head;
                acc_sets_ = expect_int("acceptance set count");
                formula_ = disjunction();
                if (!at_header_end())
                  fail("unexpected token in acceptance formula", peek());
              }
            else if (name == "properties")
              {
                while (!at_header_end())
                  properties_.push_back(next().text);
              }
            else if (name == "Alias")
              fail("aliases are unsupported", head);
            else if (name == "symbol-names")
              {
                symbol_tok_ = head;
                symbol_names_.emplace();
                while (!at_header_end())
                  symbol_names_->push_back(expect_string("symbol name"));
              }
            else
              while (!at_header_end())
                next();
          }
        if (peek().kind != Token::Kind::Body)
          fail("expected --BODY--", peek());
        next();
      }

      Formula disjunction()
      {
        std::vector<Formula> parts{conjunction()};
        while (is_punct("|"))
          {
            next();
            parts.push_back(conjunction());
          }
        return Formula::join(Formula::Kind::Or, std::move(parts));
      }

      Formula conjunction()
      {
        std::vector<Formula> parts{atom()};
        while (is_punct("&"))
          {
            next();
            parts.push_back(atom());
          }
        return Formula::join(Formula::Kind::And, std::move(parts));
      }

      Formula atom()
      {
        if (is_punct("("))
          {
            next();
            Formula f = disjunction();
            expect_punct(")");
            return f;
          }
        const Token& t = peek();
        if (t.kind != Token::Kind::Ident)
          fail("malformed acceptance formula", t);
        next();
        if (t.text == "t")
          return {Formula::Kind::True, 0, {}};
        if (t.text == "f")
          return {Formula::Kind::False, 0, {}};
        if (t.text != "Inf" && t.text != "Fin")
          fail("unknown acceptance atom '" + t.text + "'", t);
        expect_punct("(");
        if (is_punct("!"))
          fail("complemented acceptance sets are unsupported", peek());
        unsigned s = expect_int("acceptance set");
        expect_punct(")");
        return t.text == "Inf" ? Formula::inf(s) : Formula::fin(s);
      }

      struct Edge
      {
        SymbolId symbol;
        unsigned target;
      };

      struct StateBlock
      {
        std::vector<unsigned> marks;
        std::vector<Edge> edges;
        Token at;
      };

      void body()
      {
        while (peek().kind == Token::Kind::Header && peek().text == "State")
          {
            const Token head = next();
            unsigned id = expect_int("state number");
            if (peek().kind == Token::Kind::String)
              next();
            if (blocks_.count(id))
              fail("state " + std::to_string(id) + " declared twice", head);
            StateBlock block;
            block.at = head;
            if (is_punct("{"))
              block.marks = marks();
            while (peek().kind != Token::Kind::Header && peek().kind != Token::Kind::End)
              {
                if (peek().kind == Token::Kind::Abort)
                  fail("aborted document", peek());
                if (peek().kind == Token::Kind::Eof)
                  fail("missing --END--", peek());
                if (!is_punct("["))
                  fail("implicit edge labels are unsupported", peek());
                block.edges.push_back(edge());
              }
            blocks_.emplace(id, std::move(block));
          }
        if (peek().kind == Token::Kind::Header)
          fail("unexpected header '" + peek().text + "' in body", peek());
        if (peek().kind != Token::Kind::End)
          fail("missing --END--", peek());
        end_tok_ = next();
      }

      std::vector<unsigned> marks()
      {
        expect_punct("{");
        std::vector<unsigned> out;
        while (!is_punct("}"))
          out.push_back(expect_int("acceptance set number"));
        next();
        return out;
      }

      Edge edge()
      {
        const Token open = next();
        std::vector<int> seen(aps_.size(), -1);
        bool trivially_true = false;
        for (bool first = true;; first = false)
          {
            if (!first)
              {
                if (is_punct("|"))
                  fail("label disjunctions are unsupported; use one complete conjunction per edge",
                       peek());
                if (is_punct("]"))
                  break;
                expect_punct("&");
              }
            const Token& lit = peek();
            if (lit.kind == Token::Kind::Alias)
              fail("aliases are unsupported", lit);
            if (lit.kind == Token::Kind::Ident && lit.text == "t")
              {
                next();
                trivially_true = true;
                continue;
              }
            if (lit.kind == Token::Kind::Punct && lit.text == "(")
              fail("parenthesized labels are unsupported", lit);
            bool positive = true;
            if (is_punct("!"))
              {
                next();
                positive = false;
              }
            const Token& ap_tok = peek();
            unsigned ap = expect_int("AP number");
            if (ap >= aps_.size())
              fail("AP " + std::to_string(ap) + " is not declared", ap_tok);
            if (seen[ap] != -1)
              fail("AP " + std::to_string(ap) + " occurs twice in a label", ap_tok);
            seen[ap] = positive ? 1 : 0;
          }
        next();
        if (std::count(seen.begin(), seen.end(), -1) != 0 || (trivially_true && !aps_.empty()))
          fail("incomplete label: every AP must be assigned", open);
        SymbolId sym = 0;
        for (std::size_t j = 0; j < seen.size(); ++j)
          if (seen[j] == 1)
            sym |= SymbolId{1} << j;
        unsigned target = expect_int("edge target");
        if (is_punct("&"))
          fail("alternating (conjunctive) targets are unsupported", peek());
        if (is_punct("{"))
          fail("edge acceptance marks are unsupported", peek());
        return {sym, target};
      }

      Acceptance acceptance_from_name(std::size_t n)
      {
        if (acc_name_.empty())
          fail("missing acc-name header", acc_tok_.value_or(peek()));
        const Token& at = *acc_tok_;
        const std::string& kind = acc_name_[0];
        auto count_param = [&]() -> unsigned {
          if (acc_name_.size() != 2)
            fail("acc-name '" + kind + "' expects one integer parameter", at);
          try
            {
              return static_cast<unsigned>(std::stoul(acc_name_[1]));
            }
          catch (const std::exception&)
            {
              fail("acc-name parameter must be an integer", at);
            }
        };
        if (kind == "Buchi")
          {
            if (acc_name_.size() != 1)
              fail("acc-name 'Buchi' takes no parameters", at);
            return BuchiAcceptance{StateSet(n)};
          }
        if (kind == "Rabin")
          {
            RabinAcceptance r;
            r.pairs.assign(count_param(), RabinPair{StateSet(n), StateSet(n)});
            return r;
          }
        if (kind == "Streett")
          {
            StreettAcceptance s;
            s.pairs.assign(count_param(), StreettPair{StateSet(n), StateSet(n)});
            return s;
          }
        if (kind == "parity")
          {
            if (acc_name_.size() != 4)
              fail("acc-name 'parity' expects min|max, even|odd and a count", at);
            if (acc_name_[1] != "min" || acc_name_[2] != "even")
              fail("unsupported parity polarity '" + acc_name_[1] + " " + acc_name_[2]
                     + "' (only 'min even')",
                   at);
            ParityAcceptance p;
            try
              {
                p.index = static_cast<unsigned>(std::stoul(acc_name_[3]));
              }
            catch (const std::exception&)
              {
                fail("parity index must be an integer", at);
              }
            if (p.index == 0)
              fail("parity index must be positive", at);
            p.priority.assign(n, p.index);
            return p;
          }
        fail("unsupported acceptance '" + kind + "'", at);
      }

      Automaton build()
      {
        if (!states_)
          fail("missing States header", toks_.front());
        if (!start_)
          fail("missing Start header", toks_.front());
        if (!accept_tok_)
          fail("missing Acceptance header", toks_.front());
        const std::size_t n = *states_;
        if (*start_ >= n)
          fail("start state out of range", *start_tok_);

        Acceptance acc = acceptance_from_name(n);
        AccShape shape = shape_of(acc);
        if (acc_sets_ != shape.sets || !(formula_ == shape.formula))
          fail("Acceptance formula does not match acc-name " + acceptance_name(acc)
                 + " (expected " + std::to_string(shape.sets) + " " + render(shape.formula) + ")",
               *accept_tok_);

        if (aps_.size() > 16)
          fail("too many atomic propositions", *ap_tok_);
        Alphabet sigma = Alphabet::from_aps(aps_);
        if (symbol_names_)
          {
            if (symbol_names_->size() != sigma.size())
              fail("symbol-names must list one name per valuation", *symbol_tok_);
            sigma.symbols = *symbol_names_;
          }
        bool det = std::find(properties_.begin(), properties_.end(), "deterministic")
          != properties_.end();

        Automaton a(std::move(sigma), n, std::move(acc), det);
        a.initial = *start_;
        for (auto& [id, block] : blocks_)
          {
            if (id >= n)
              fail("state " + std::to_string(id) + " out of range", block.at);
            for (const auto& e : block.edges)
              {
                if (e.target >= n)
                  fail("edge target " + std::to_string(e.target) + " out of range", block.at);
                a.add_edge(id, e.symbol, e.target);
              }
            for (unsigned m : block.marks)
              if (m >= shape.sets)
                fail("acceptance set " + std::to_string(m) + " is not declared", block.at);
            apply_marks(a, id, block);
          }
        if (auto* p = std::get_if<ParityAcceptance>(&a.acceptance))
          for (StateId s = 0; s < n; ++s)
            if (p->priority[s] >= p->index)
              {
                auto it = blocks_.find(s);
                fail("state " + std::to_string(s) + " needs exactly one priority",
                     it == blocks_.end() ? end_tok_ : it->second.at);
              }
        auto diags = validate_automaton(a);
        if (!diags.empty())
          fail(to_string(diags.front()), end_tok_);
        return a;
      }

      void apply_marks(Automaton& a, StateId s, const StateBlock& block)
      {
        if (auto* b = std::get_if<BuchiAcceptance>(&a.acceptance))
          {
            if (!block.marks.empty())
              b->accepting.set(s);
          }
        else if (auto* r = std::get_if<RabinAcceptance>(&a.acceptance))
          for (unsigned m : block.marks)
            (m % 2 ? r->pairs[m / 2].inf : r->pairs[m / 2].fin).set(s);
        else if (auto* st = std::get_if<StreettAcceptance>(&a.acceptance))
          for (unsigned m : block.marks)
            (m % 2 ? st->pairs[m / 2].request : st->pairs[m / 2].guard).set(s);
        else
          {
            auto& p = std::get<ParityAcceptance>(a.acceptance);
            if (block.marks.size() != 1)
              fail("state " + std::to_string(s) + " needs exactly one priority", block.at);
            p.priority[s] = block.marks.front();
          }
      }

      std::vector<Token> toks_;
      std::size_t pos_ = 0;

      std::optional<unsigned> states_;
      std::optional<unsigned> start_;
      std::optional<Token> start_tok_;
      std::vector<std::string> aps_;
      std::optional<Token> ap_tok_;
      std::vector<std::string> acc_name_;
      std::optional<Token> acc_tok_;
      unsigned acc_sets_ = 0;
      Formula formula_;
      std::optional<Token> accept_tok_;
      std::vector<std::string> properties_;
      std::optional<std::vector<std::string>> symbol_names_;
      std::optional<Token> symbol_tok_;
      std::map<unsigned, StateBlock> blocks_;
      Token end_tok_{Token::Kind::Eof, "", 0, 0};
    };

    std::vector<unsigned>
    marks_of(const Acceptance& acc, StateId s)
    {
      std::vector<unsigned> out;
      if (auto* b = std::get_if<BuchiAcceptance>(&acc))
        {
          if (b->accepting.test(s))
            out.push_back(0);
        }
      else if (auto* r = std::get_if<RabinAcceptance>(&acc))
        {
          for (unsigned i = 0; i < r->pairs.size(); ++i)
            {
              if (r->pairs[i].fin.test(s))
                out.push_back(2 * i);
              if (r->pairs[i].inf.test(s))
                out.push_back(2 * i + 1);
            }
        }
      else if (auto* st = std::get_if<StreettAcceptance>(&acc))
        {
          for (unsigned i = 0; i < st->pairs.size(); ++i)
            {
              if (st->pairs[i].guard.test(s))
                out.push_back(2 * i);
              if (st->pairs[i].request.test(s))
                out.push_back(2 * i + 1);
            }
        }
      else
        out.push_back(std::get<ParityAcceptance>(acc).priority[s]);
      return out;
    }
  }

  Automaton
  parse_hoa(std::string_view text)
  {
    return Parser(text).parse();
  }

  std::string
  emit_hoa(const Automaton& a)
  {
    auto diags = validate_automaton(a);
    if (!diags.empty())
      throw std::invalid_argument("emit_hoa: invalid automaton: " + to_string(diags.front()));

    std::vector<std::string> aps = a.alphabet.aps;
    if (aps.empty())
      {
        std::size_t size = a.alphabet.size();
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < size)
          ++bits;
        if ((std::size_t{1} << bits) != size)
          throw std::invalid_argument(
            "emit_hoa: alphabet of " + std::to_string(size)
            + " symbols is not a power of two; re-encode it over atomic propositions");
        for (std::size_t j = 0; j < bits; ++j)
          aps.push_back("p" + std::to_string(j));
      }

    AccShape shape = shape_of(a.acceptance);
    std::ostringstream os;
    os << "HOA: v1\n";
    os << "States: " << a.state_count << "\n";
    os << "Start: " << a.initial << "\n";
    os << "AP: " << aps.size();
    for (const auto& p : aps)
      os << ' ' << quote(p);
    os << "\n";
    os << "acc-name: " << acceptance_name(a.acceptance) << "\n";
    os << "Acceptance: " << shape.sets << ' ' << render(shape.formula) << "\n";
    os << "properties: trans-labels explicit-labels state-acc";
    if (a.deterministic)
      os << " deterministic";
    os << "\n";
    os << "symbol-names:";
    for (const auto& s : a.alphabet.symbols)
      os << ' ' << quote(s);
    os << "\n";
    os << "--BODY--\n";
    for (StateId s = 0; s < a.state_count; ++s)
      {
        os << "State: " << s;
        auto m = marks_of(a.acceptance, s);
        if (!m.empty())
          {
            os << " {";
            for (std::size_t i = 0; i < m.size(); ++i)
              os << (i ? " " : "") << m[i];
            os << '}';
          }
        os << "\n";
        for (SymbolId x = 0; x < a.alphabet.size(); ++x)
          {
            std::string label;
            if (aps.empty())
              label = "t";
            else
              for (std::size_t j = 0; j < aps.size(); ++j)
                {
                  if (j)
                    label += '&';
                  if (!((x >> j) & 1u))
                    label += '!';
                  label += std::to_string(j);
                }
            for (StateId t : a.succ(s, x))
              os << '[' << label << "] " << t << "\n";
          }
      }
    os << "--END--\n";
    return os.str();
  }
}
