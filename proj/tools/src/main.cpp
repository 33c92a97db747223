#include <iostream>

#include "typrank_app/cli.hpp"

int main(int argc, char** argv) { return typrank::app::run_cli(argc, argv, std::cout, std::cerr); }
