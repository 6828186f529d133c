#include <iostream>

#include "conglat/cli/app.hpp"

int main(int argc, char** argv) { return conglat::cli::run(argc, argv, std::cout, std::cerr); }
