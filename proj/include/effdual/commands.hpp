#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "effdual/config.hpp"
#include "effdual/report.hpp"
#include "effdual/value.hpp"

namespace effdual {

// Exit codes shared by every subcommand.
inline constexpr int exit_pass = 0;   // all checks passed / result produced
inline constexpr int exit_fail = 1;   // counterexample, failed law, no dual
inline constexpr int exit_usage = 2;  // parse, type, input or config error

// Element input syntax, directed by the expected object:
//   carrier   0
//   state     {i:0,j:2}            (every index exactly once, any order)
//   exception (j,2)
//   product   (left, right)
//   sum       normal(left) | exceptional(right)
Value parse_value(const FamilySignature& sig, const ObjExpr& type, std::string_view src);

// Human format substitutes display labels for ordinals where the config
// provides them; machine format always prints ordinals.
std::string format_value(const Config& config, const ObjExpr& type, const Value& v,
                         Format format);

int cmd_laws(const Config& config, Format format, std::ostream& out);
int cmd_equiv(const Config& config, const std::string& lhs_src,
              const std::string& rhs_src, Format format, std::ostream& out);
int cmd_eval(const Config& config, const std::string& term_src,
             const std::string& input_src, Format format, std::ostream& out);
int cmd_dualize(const Config& config, const std::string& term_src, Format format,
                std::ostream& out);

struct HandlerSpec {
  std::string index;
  std::string src;
};

int cmd_handle_demo(const Config& config, const std::string& f_src,
                    const std::vector<HandlerSpec>& handlers,
                    const std::string& input_src, Format format, std::ostream& out);

}  // namespace effdual
