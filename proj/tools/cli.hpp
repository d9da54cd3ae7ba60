#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvec::cli {

enum ExitCode : int { kOk = 0, kMalformedInput = 1, kViolations = 2 };

// Runs one command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Blocks serving the session API until stop_server() or a signal.
int serve(const std::string& host, int port, std::ostream& out);
void stop_server();

}  // namespace cvec::cli
