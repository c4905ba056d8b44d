#include "braidcong/cli.hpp"

int main(int argc, char** argv) { return braidcong::run_cli(argc, argv); }
