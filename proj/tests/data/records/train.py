# Training entry point for the routability model.
import argparse
import os

import torch


def build_parser():
    parser = argparse.ArgumentParser(description="train")
    parser.add_argument("--data_root", default=None)
    parser.add_argument("--label_root", default=None)
    parser.add_argument("--ann_file", default=None)
    parser.add_argument("--dataroot", default=None)
    parser.add_argument("--batch_size", default=None)
    parser.add_argument("--max_iters", default=None)
    parser.add_argument("--lr", default=None)
    parser.add_argument("--weight_decay", default=None)
    parser.add_argument("--save_path", default=None)
    parser.add_argument("--save_freq", default=None)
    parser.add_argument("--log_freq", default=None)
    parser.add_argument("--seed", default=None)
    parser.add_argument("--device", default=None)
    parser.add_argument("--pretrained", default=None)
    parser.add_argument("--loss_type", default=None)
    parser.add_argument("--model_type", default=None)
    parser.add_argument("--in_channels", default=None)
    parser.add_argument("--out_channels", default=None)
    parser.add_argument("--aug_pipeline", default=None)
    parser.add_argument("--eval_metric", default=None)
    parser.add_argument("--plot", default=None)
    parser.add_argument("--cpu", default=None)
    parser.add_argument("--arg_file", default=None)
    parser.add_argument("--test_mode", default=None)
    parser.add_argument("--data_root_1", default=None)
    parser.add_argument("--label_root_1", default=None)
    parser.add_argument("--ann_file_1", default=None)
    parser.add_argument("--dataroot_1", default=None)
    parser.add_argument("--batch_size_1", default=None)
    parser.add_argument("--max_iters_1", default=None)
    parser.add_argument("--lr_1", default=None)
    parser.add_argument("--weight_decay_1", default=None)
    parser.add_argument("--save_path_1", default=None)
    parser.add_argument("--save_freq_1", default=None)
    parser.add_argument("--log_freq_1", default=None)
    parser.add_argument("--seed_1", default=None)
    parser.add_argument("--device_1", default=None)
    parser.add_argument("--pretrained_1", default=None)
    parser.add_argument("--loss_type_1", default=None)
    parser.add_argument("--model_type_1", default=None)
    parser.add_argument("--in_channels_1", default=None)
    parser.add_argument("--out_channels_1", default=None)
    parser.add_argument("--aug_pipeline_1", default=None)
    parser.add_argument("--eval_metric_1", default=None)
    parser.add_argument("--plot_1", default=None)
    parser.add_argument("--cpu_1", default=None)
    parser.add_argument("--arg_file_1", default=None)
    parser.add_argument("--test_mode_1", default=None)
    parser.add_argument("--data_root_2", default=None)
    parser.add_argument("--label_root_2", default=None)
    parser.add_argument("--ann_file_2", default=None)
    parser.add_argument("--dataroot_2", default=None)
    parser.add_argument("--batch_size_2", default=None)
    parser.add_argument("--max_iters_2", default=None)
    parser.add_argument("--lr_2", default=None)
    parser.add_argument("--weight_decay_2", default=None)
    parser.add_argument("--save_path_2", default=None)
    parser.add_argument("--save_freq_2", default=None)
    parser.add_argument("--log_freq_2", default=None)
    parser.add_argument("--seed_2", default=None)
    parser.add_argument("--device_2", default=None)
    parser.add_argument("--pretrained_2", default=None)
    parser.add_argument("--loss_type_2", default=None)
    parser.add_argument("--model_type_2", default=None)
    parser.add_argument("--in_channels_2", default=None)
    parser.add_argument("--out_channels_2", default=None)
    parser.add_argument("--aug_pipeline_2", default=None)
    parser.add_argument("--eval_metric_2", default=None)
    parser.add_argument("--plot_2", default=None)
    parser.add_argument("--cpu_2", default=None)
    parser.add_argument("--arg_file_2", default=None)
    parser.add_argument("--test_mode_2", default=None)
    parser.add_argument("--data_root_3", default=None)
    parser.add_argument("--label_root_3", default=None)
    parser.add_argument("--ann_file_3", default=None)
    parser.add_argument("--dataroot_3", default=None)
    parser.add_argument("--batch_size_3", default=None)
    parser.add_argument("--max_iters_3", default=None)
    parser.add_argument("--lr_3", default=None)
    parser.add_argument("--weight_decay_3", default=None)
    parser.add_argument("--save_path_3", default=None)
    parser.add_argument("--save_freq_3", default=None)
    parser.add_argument("--log_freq_3", default=None)
    parser.add_argument("--seed_3", default=None)
    parser.add_argument("--device_3", default=None)
    parser.add_argument("--pretrained_3", default=None)
    parser.add_argument("--loss_type_3", default=None)
    parser.add_argument("--model_type_3", default=None)
    parser.add_argument("--in_channels_3", default=None)
    parser.add_argument("--out_channels_3", default=None)
    parser.add_argument("--aug_pipeline_3", default=None)
    parser.add_argument("--eval_metric_3", default=None)
    parser.add_argument("--plot_3", default=None)
    parser.add_argument("--cpu_3", default=None)
    parser.add_argument("--arg_file_3", default=None)
    parser.add_argument("--test_mode_3", default=None)
    parser.add_argument("--data_root_4", default=None)
    parser.add_argument("--label_root_4", default=None)
    parser.add_argument("--ann_file_4", default=None)
    parser.add_argument("--dataroot_4", default=None)
    parser.add_argument("--batch_size_4", default=None)
    parser.add_argument("--max_iters_4", default=None)
    parser.add_argument("--lr_4", default=None)
    parser.add_argument("--weight_decay_4", default=None)
    parser.add_argument("--save_path_4", default=None)
    parser.add_argument("--save_freq_4", default=None)
    parser.add_argument("--log_freq_4", default=None)
    parser.add_argument("--seed_4", default=None)
    parser.add_argument("--device_4", default=None)
    parser.add_argument("--pretrained_4", default=None)
    parser.add_argument("--loss_type_4", default=None)
    parser.add_argument("--model_type_4", default=None)
    parser.add_argument("--in_channels_4", default=None)
    parser.add_argument("--out_channels_4", default=None)
    parser.add_argument("--aug_pipeline_4", default=None)
    parser.add_argument("--eval_metric_4", default=None)
    parser.add_argument("--plot_4", default=None)
    parser.add_argument("--cpu_4", default=None)
    parser.add_argument("--arg_file_4", default=None)
    parser.add_argument("--test_mode_4", default=None)
    parser.add_argument("--data_root_5", default=None)
    parser.add_argument("--label_root_5", default=None)
    parser.add_argument("--ann_file_5", default=None)
    parser.add_argument("--dataroot_5", default=None)
    parser.add_argument("--batch_size_5", default=None)
    parser.add_argument("--max_iters_5", default=None)
    parser.add_argument("--lr_5", default=None)
    parser.add_argument("--weight_decay_5", default=None)
    parser.add_argument("--save_path_5", default=None)
    parser.add_argument("--save_freq_5", default=None)
    return parser


def checkpoint(model, path, step):
    os.makedirs(path, exist_ok=True)
    torch.save(model.state_dict(), os.path.join(path, "model_iters_%d.pth" % step))


def train(arg_dict, model, loader, optimizer, loss_fn):
    save_freq = arg_dict["save_freq"]
    print_freq = arg_dict["log_freq"]
    iter_num = 0
    epoch_loss = 0.0
    while iter_num < arg_dict["max_iters"]:
        for feature, label in loader:
            optimizer.zero_grad()
            loss = loss_fn(model(feature), label)
            loss.backward()
            optimizer.step()
            epoch_loss += loss.item()
            iter_num += 1
        if iter_num % save_freq == 0:
            checkpoint(model, arg_dict["save_path"], iter_num)
        print("iter", iter_num, epoch_loss / print_freq)
        epoch_loss = 0.0
