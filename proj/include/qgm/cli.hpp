#ifndef QGM_CLI_HPP
#define QGM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qgm {

// Command dispatcher behind the qgm binary. Returns the process exit code:
// 0 for success/true, 1 for false or a reported violation, 2 for usage,
// parse, or enumeration-cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qgm

#endif  // QGM_CLI_HPP
