#include <doctest.h>
int d3;
