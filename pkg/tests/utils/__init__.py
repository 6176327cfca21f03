from .test_helpers import load_case_config, print_values, make_dataset
