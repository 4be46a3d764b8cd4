namespace cartprod {}
