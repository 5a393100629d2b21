#include "coxamida/cli.hpp"

int main(int argc, char** argv) { return coxamida::run_cli(argc, argv); }
