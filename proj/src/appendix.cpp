#include "fltlab/appendix.hpp"

namespace fltlab {

namespace {

AppendixLine line(std::string who, unsigned k, std::initializer_list<const char*> terms, const char* rhs) {
  AppendixLine l{std::move(who), k, {}, ExactInt::parse(rhs), true};
  for (const char* t : terms) l.terms.push_back(ExactInt::parse(t));
  return l;
}

}  // namespace

// Table version 1. See docs/appendix_table.md for the transcription notes.
const std::vector<AppendixLine>& appendix_lines() {
  static const std::vector<AppendixLine> lines = {
      line("Elkies (1988)", 4, {"2682440", "5365639", "18796760"}, "20615673"),
      line("R. Frye (1988)", 4, {"95800", "217519", "414560"}, "422481"),
      line("MacLeod (1997)", 4, {"630662624", "275156240", "219076465"}, "638523249"),
      line("Bernstein (2001)", 4, {"1705575", "5507880", "8332208"}, "8707481"),
      line("Lander, Parkin (1966)", 5, {"27", "84", "10", "133"}, "144"),
      line("J. Frye (2004)", 5, {"55", "3183", "28969", "85282"}, "85359"),
  };
  return lines;
}

std::vector<AppendixVerdict> verify_appendix() {
  std::vector<AppendixVerdict> out;
  for (const auto& l : appendix_lines()) {
    AppendixVerdict v;
    v.line = l;
    v.identity = verify_identity(l.k, l.terms, {l.rhs_value});
    std::vector<ExactInt> all = l.terms;
    all.push_back(l.rhs_value);
    v.coprime = pairwise_coprime(all);
    if (!v.identity.balanced) {
      for (std::size_t slot = 0; slot <= l.terms.size(); ++slot) {
        PartialInstance p{l.k, {}, {}};
        for (std::size_t i = 0; i < l.terms.size(); ++i) {
          p.lhs.push_back(i == slot ? std::nullopt : std::optional<ExactInt>(l.terms[i]));
        }
        const bool rhs = slot == l.terms.size();
        p.rhs.push_back(rhs ? std::nullopt : std::optional<ExactInt>(l.rhs_value));
        v.recoveries.push_back({slot + 1, rhs, recover_missing_term(p)});
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fltlab
