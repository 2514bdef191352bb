import logging

from libwmc.logger import Logger


def test_log_to_file(tmp_path) -> None:
    log_file = tmp_path / 'wmclab.log'
    logger = Logger(log_file, 'info')
    logging.getLogger('libwmc.test').info('Testing the logging system')
    logger.close()

    text = log_file.read_text()
    assert 'Testing the logging system' in text
    assert text.startswith('wmclab ')
    assert 'INFO' in text


def test_log_level(tmp_path) -> None:
    logger = Logger(tmp_path / 'wmclab.log')
    assert logging.getLogger('libwmc').level == logging.WARNING
    assert logging.getLogger('yatiml').level == logging.WARNING
    logger.close()
