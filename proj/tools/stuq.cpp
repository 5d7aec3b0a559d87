#include <iostream>

#include "stuq/cli.hpp"

int main(int argc, char** argv) {
    return stuq::cli::run(argc, argv, std::cout, std::cerr);
}
