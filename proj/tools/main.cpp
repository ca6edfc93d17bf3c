#include <iostream>
#include <string>
#include <vector>

#include <qseries/cli.hpp>

int main(int argc, char **argv)
{
    return qseries::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
