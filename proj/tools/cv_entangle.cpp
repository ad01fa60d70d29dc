#include "cvent/cli.hpp"

int main(int argc, char** argv) { return cvent::cli::run(argc, argv); }
