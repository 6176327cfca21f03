from .json_result_sink import JSONResultSink
from .csv_result_sink import CSVResultSink

__all__ = [
    'JSONResultSink',
    'CSVResultSink',
]
