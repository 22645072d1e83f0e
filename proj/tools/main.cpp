#include "boxball/cli.hpp"

int main(int argc, char** argv) { return boxball::run_cli(argc, argv); }
