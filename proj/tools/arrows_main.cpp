#include "arrows/cli.hpp"

int main(int argc, char** argv) { return arrows::cli::run_main(argc, argv); }
