#pragma once

namespace boxball {

// Exit codes: 0 success, 1 usage or input error, 2 failed --check verdict.
int run_cli(int argc, char** argv);

}  // namespace boxball
