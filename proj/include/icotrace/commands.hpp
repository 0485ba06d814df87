#pragma once

#include <iosfwd>
#include <string>

#include "icotrace/config.hpp"

namespace icotrace {

// Batch driver entry point. Commands: chartab | branch | fibers | satake |
// smoothsum | trace-identity. Returns the process exit code: 0 all checks
// pass, 1 a mathematical check failed, 2 configuration error.
int run_command(const std::string& command, const RunConfig& cfg, const std::string& out_dir,
                const std::string& fixture_dir, bool write_fixture, std::ostream& log);

}  // namespace icotrace
