type_maps = {
    "survival_csv": {
        "time": "float64",
        "status": "float64",
    },
}
