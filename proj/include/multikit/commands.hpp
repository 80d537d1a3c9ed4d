#ifndef MULTIKIT_COMMANDS_HPP
#define MULTIKIT_COMMANDS_HPP

#include <string>

#include "multikit/superring.hpp"

namespace multikit {

/// Command-shaped entry points: every CLI subcommand is a thin wrapper over
/// one of these. Structures are referenced as "builtin:<name>" or a table
/// file path. `format` is "text" or "json"; JSON output is stable-ordered.
///
/// Exit codes: 0 success (and, for conformance, all verdicts as expected),
/// 1 computation or check failure, 2 usage error.
struct CommandResult {
    int exit_code = 0;
    std::string output; // stdout
    std::string error;  // stderr
};

SuperringPtr resolve_structure(const std::string& ref);

CommandResult cmd_validate(const std::string& ref, const std::string& format);
CommandResult cmd_char(const std::string& ref, const std::string& format);
CommandResult cmd_table(const std::string& ref, const std::string& format);
CommandResult cmd_ideals(const std::string& ref, unsigned max_carrier, const std::string& format);
CommandResult cmd_morphism(const std::string& dom_ref, const std::string& cod_ref,
                           const std::string& map_text, const std::string& format);
CommandResult cmd_iso(const std::string& a_ref, const std::string& b_ref,
                      const std::string& format);
CommandResult cmd_poly_eval(const std::string& ref, const std::string& poly,
                            const std::string& point, const std::string& format);
CommandResult cmd_poly_mul(const std::string& ref, const std::string& f, const std::string& g,
                           const std::string& format);
CommandResult cmd_poly_div(const std::string& ref, const std::string& f, const std::string& g,
                           const std::string& format);
CommandResult cmd_poly_roots(const std::string& ref, const std::string& f,
                             const std::string& format);
CommandResult cmd_irred(const std::string& ref, const std::string& p, const std::string& format);
CommandResult cmd_quotient(const std::string& ref, const std::string& p, const std::string& mode,
                           unsigned sat_degree, const std::string& format);
CommandResult cmd_extend(const std::string& ref, const std::string& p, const std::string& mode,
                         const std::string& format);
CommandResult cmd_closure(const std::string& ref, unsigned max_degree, unsigned max_steps,
                          const std::string& format, const std::string& manifest_dir = "");
CommandResult cmd_conformance(const std::string& format);

} // namespace multikit

#endif
