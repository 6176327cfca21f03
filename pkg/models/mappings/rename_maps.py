rename_maps = {
    "selection_metrics": {
        "tp_fixed": "tp_fixef",
        "fp_fixed": "fp_fixef",
        "tp_random": "tp_ranef",
        "fp_random": "fp_ranef",
        "mean_abs_dev": "abs_dev_mean",
        "frob_std": "frob_norm",
        "runtime": "t_med_hours",
    }
}
